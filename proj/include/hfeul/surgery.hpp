#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfeul/alexander.hpp"
#include "hfeul/rational.hpp"
#include "hfeul/report.hpp"

namespace hfeul {

/// p/q filling of a knot complement X with H_1(X; R) = R.
///
/// `d` is the divisibility of the longitude, `tors_order` = |Tors H_1(X)|,
/// `alex` the symmetrized Alexander polynomial of the 0-filling Y_0, and
/// the two base values are sum Eul(Y, .) and lambda'(Y) for Y = Y_{1/0}.
struct SurgeryProblem {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t d = 1;
  std::int64_t tors_order = 1;
  SymmetricLaurent alex = SymmetricLaurent::unknot();
  Rational base_eul_sum;
  Rational base_lambda_prime;

  /// p/q surgery on a knot in S^3 with the given Alexander polynomial.
  static SurgeryProblem in_s3(SymmetricLaurent alex, std::int64_t p,
                              std::int64_t q);
};

struct ValidationError {
  std::string field;
  std::string reason;
};

/// Every violated invariant, in field order. Empty means valid.
std::vector<ValidationError> validate(const SurgeryProblem& prob);

/// Throws precondition_error listing the validation errors, if any.
void require_valid(const SurgeryProblem& prob);

/// |Tors H^2(Y_0)| = tors_order / d: the longitude is torsion of order d in
/// H_1(X) and the 0-filling kills it.
std::int64_t zero_surgery_torsion(const SurgeryProblem& prob);

/// |H_1(Y_{p/q})| = |p| d tors_order.
Integer h1_order(const SurgeryProblem& prob);

/// eps'(p,q,d) = q(d^2-1)/(24d) - p d s(q,p)/2, with s(q,-p) = s(q,p).
Rational epsilon_prime(std::int64_t p, std::int64_t q, std::int64_t d);

/// lambda'(Y_{p/q}) = p lambda'(Y) + q sum a_j j^2 + |Tors H_1(X)| eps'.
Rational lambda_prime_after_surgery(const SurgeryProblem& prob);

/// sum_b Eul(Y_{p/q}, b) = p sum Eul(Y) + q sum a_i i^2 + |Tors H_1(X)| eps.
/// eps(p,q,d) is taken equal to eps'(p,q,d).
Rational eul_sum_after_surgery(const SurgeryProblem& prob);

/// lambda'(Y_{p/q}) / |H_1(Y_{p/q})|.
Rational lambda_after_surgery(const SurgeryProblem& prob);

enum class Filling { base, zero, surgered };

/// Size of a fiber of Spin^c(filling) -> Spin^c(X); nullopt for the
/// 0-filling, where Z acts freely and fibers are infinite.
std::optional<Integer> spinc_fiber_size(const SurgeryProblem& prob,
                                        Filling which);

/// Casson invariant of S^3_{1/n}(K): n sum a_i i^2. Needs A(1) = 1.
Rational casson_from_one_over_n(const SymmetricLaurent& alex, std::int64_t n);

struct LensResidual {
  std::int64_t p;
  std::int64_t q;
  Rational residual;
};

/// For every coprime 0 < q < p <= pmax, compare the surgery formula for the
/// unknot against the summed lens-space Euler characteristics.
std::vector<LensResidual> cross_check_lens(std::int64_t pmax);

/// Full report for one problem: derived values plus identity checks.
InvariantReport surgery_report(const SurgeryProblem& prob);

}  // namespace hfeul
