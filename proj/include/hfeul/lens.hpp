#pragma once

#include <cstdint>
#include <vector>

#include "hfeul/rational.hpp"

namespace hfeul {

/// A lens space with orientation.
///
/// orientation -1 is L(-p,q) = S^3_{p/q}(unknot); orientation +1 is its
/// mirror L(p,q). q is stored reduced to [0, p); L(1,0) is S^3.
class LensSpace {
 public:
  LensSpace(std::int64_t p, std::int64_t q, int orientation = +1);

  static LensSpace sphere() { return LensSpace(1, 0); }
  /// The result of p/q surgery on the unknot in S^3 (p != 0).
  static LensSpace from_unknot_surgery(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  int orientation() const { return orientation_; }
  LensSpace reversed() const { return LensSpace(p_, q_, -orientation_); }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
  int orientation_;
};

/// Opaque Spin^c label 0..p-1. No identification with any geometric
/// labeling is claimed; comparisons across invariants are multiset-level.
struct SpincLabel {
  std::int64_t index = 0;
  friend auto operator<=>(const SpincLabel&, const SpincLabel&) = default;
};

/// Correction terms d(L, i), indexed by label.
std::vector<Rational> d_invariants(const LensSpace& lens);

/// The Spin^c conjugation involution on labels, i -> q - 1 - i mod p.
SpincLabel conjugate(const LensSpace& lens, SpincLabel label);

/// sum_i d(L(-p,q), i) - p s(q,p); exactly zero.
Rational d_sum_check(std::int64_t p, std::int64_t q);

/// Eul(L, i) = -d(L, i)/2 (the reduced group vanishes for lens spaces).
std::vector<Rational> eul_lens(const LensSpace& lens);

/// Casson-Walker invariant; lambda(L(-p,q)) = -s(q,p)/2.
Rational lambda_lens(const LensSpace& lens);

/// Turaev torsion function tau(L, h), h in Z/p, from the character formula
/// 1/((z-1)(z^q-1)) over nontrivial p-th roots z, evaluated exactly on
/// the group algebra Q[Z/p]. Sums to zero.
std::vector<Rational> torsion_function(const LensSpace& lens);

/// Sorted multiset { -tau(L, h) + lambda(L) }.
std::vector<Rational> torsion_hat_multiset(const LensSpace& lens);

/// Sorted copy, for multiset comparisons.
std::vector<Rational> as_multiset(std::vector<Rational> values);

Rational sum(const std::vector<Rational>& values);

}  // namespace hfeul
