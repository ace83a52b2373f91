#include "hfeul/surgery.hpp"

#include <string>

#include "hfeul/dedekind.hpp"
#include "hfeul/errors.hpp"
#include "hfeul/lens.hpp"

namespace hfeul {

namespace {

Integer big(std::int64_t n) { return Integer(static_cast<long>(n)); }

bool is_unknot_in_s3(const SurgeryProblem& prob) {
  return prob.d == 1 && prob.tors_order == 1 &&
         prob.alex == SymmetricLaurent::unknot() && prob.base_eul_sum.is_zero() &&
         prob.base_lambda_prime.is_zero();
}

}  // namespace

SurgeryProblem SurgeryProblem::in_s3(SymmetricLaurent alex, std::int64_t p,
                                     std::int64_t q) {
  SurgeryProblem prob;
  prob.p = p;
  prob.q = q;
  prob.alex = std::move(alex);
  return prob;
}

std::vector<ValidationError> validate(const SurgeryProblem& prob) {
  std::vector<ValidationError> errors;
  if (prob.p == 0) {
    errors.push_back({"p", "p must be nonzero (the 0-filling is not a rational "
                           "homology sphere)"});
  }
  if (gcd(prob.p, prob.q) != 1) {
    errors.push_back({"q", "gcd(p,q) ≠ 1"});
  }
  if (prob.d < 1) errors.push_back({"d", "d must be >= 1"});
  if (prob.tors_order < 1) errors.push_back({"tors", "tors must be >= 1"});
  if (prob.d >= 1 && prob.tors_order >= 1) {
    if (prob.tors_order % prob.d != 0) {
      errors.push_back({"tors", "the longitude has order d in Tors H_1(X), so d "
                                "must divide tors"});
    } else if (!check_normalization(prob.alex, big(zero_surgery_torsion(prob)))) {
      errors.push_back(
          {"alex", "A(1) = " + evaluate_at_one(prob.alex).get_str() +
                       " but |Tors H^2(Y_0)| = tors/d = " +
                       std::to_string(zero_surgery_torsion(prob))});
    }
  }
  return errors;
}

void require_valid(const SurgeryProblem& prob) {
  const auto errors = validate(prob);
  if (errors.empty()) return;
  std::string msg = "invalid surgery problem:";
  for (const auto& e : errors) msg += " " + e.field + ": " + e.reason + ";";
  throw precondition_error(msg);
}

std::int64_t zero_surgery_torsion(const SurgeryProblem& prob) {
  return prob.tors_order / prob.d;
}

Integer h1_order(const SurgeryProblem& prob) {
  return big(prob.p < 0 ? -prob.p : prob.p) * big(prob.d) * big(prob.tors_order);
}

Rational epsilon_prime(std::int64_t p, std::int64_t q, std::int64_t d) {
  if (d < 1) throw precondition_error("epsilon_prime: d must be >= 1");
  if (gcd(p, q) != 1) {
    throw precondition_error("epsilon_prime: gcd(" + std::to_string(p) + ", " +
                             std::to_string(q) + ") != 1");
  }
  const Rational D(d);
  Rational out = Rational(q) * (D * D - Rational(1)) / (Rational(24) * D);
  if (p != 0) {
    const Rational s = dedekind_sum(q, p < 0 ? -p : p);
    out -= Rational(p) * D * s / Rational(2);
  }
  return out;
}

Rational lambda_prime_after_surgery(const SurgeryProblem& prob) {
  require_valid(prob);
  return Rational(prob.p) * prob.base_lambda_prime +
         Rational(prob.q) * Rational(second_moment(prob.alex)) +
         Rational(prob.tors_order) * epsilon_prime(prob.p, prob.q, prob.d);
}

Rational eul_sum_after_surgery(const SurgeryProblem& prob) {
  require_valid(prob);
  return Rational(prob.p) * prob.base_eul_sum +
         Rational(prob.q) * Rational(second_moment(prob.alex)) +
         Rational(prob.tors_order) * epsilon_prime(prob.p, prob.q, prob.d);
}

Rational lambda_after_surgery(const SurgeryProblem& prob) {
  return lambda_prime_after_surgery(prob) / Rational(h1_order(prob));
}

std::optional<Integer> spinc_fiber_size(const SurgeryProblem& prob,
                                        Filling which) {
  switch (which) {
    case Filling::base:
      return big(prob.d);
    case Filling::zero:
      return std::nullopt;
    case Filling::surgered:
      return big(prob.p < 0 ? -prob.p : prob.p) * big(prob.d);
  }
  return std::nullopt;
}

Rational casson_from_one_over_n(const SymmetricLaurent& alex, std::int64_t n) {
  if (!check_normalization(alex, 1)) {
    throw precondition_error("casson_from_one_over_n: A(1) = " +
                             evaluate_at_one(alex).get_str() + ", expected 1");
  }
  return Rational(n) * Rational(second_moment(alex));
}

std::vector<LensResidual> cross_check_lens(std::int64_t pmax) {
  if (pmax < 2) throw precondition_error("cross_check_lens: pmax must be >= 2");
  std::vector<LensResidual> out;
  for (std::int64_t p = 2; p <= pmax; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto prob = SurgeryProblem::in_s3(SymmetricLaurent::unknot(), p, q);
      const Rational formula = eul_sum_after_surgery(prob);
      const Rational direct = sum(eul_lens(LensSpace::from_unknot_surgery(p, q)));
      out.push_back({p, q, formula - direct});
    }
  }
  return out;
}

InvariantReport surgery_report(const SurgeryProblem& prob) {
  require_valid(prob);
  InvariantReport r;
  r.command = "surgery";
  r.echo("p", std::to_string(prob.p));
  r.echo("q", std::to_string(prob.q));
  r.echo("d", std::to_string(prob.d));
  r.echo("tors", std::to_string(prob.tors_order));
  r.echo("alex", prob.alex.str());
  r.echo("base_eul", prob.base_eul_sum.str());
  r.echo("base_lambda", prob.base_lambda_prime.str());

  const Rational eps = epsilon_prime(prob.p, prob.q, prob.d);
  const Rational lambda_prime = lambda_prime_after_surgery(prob);
  const Rational eul = eul_sum_after_surgery(prob);
  const Integer h1 = h1_order(prob);
  const Rational lambda = lambda_prime / Rational(h1);

  r.add_value("epsilon_prime", eps);
  r.add_value("second_moment", Rational(second_moment(prob.alex)));
  r.add_value("h1_order", Rational(h1));
  r.add_value("spinc_fiber", Rational(*spinc_fiber_size(prob, Filling::surgered)));
  r.add_value("lambda_prime", lambda_prime);
  r.add_value("lambda", lambda);
  r.add_value("eul_sum", eul);

  r.add_check("alexander_normalization",
              Rational(evaluate_at_one(prob.alex)) -
                  Rational(zero_surgery_torsion(prob)),
              {"second_moment"});
  // sum Eul = |H_1| lambda must hold for Y_{p/q}; both sides come from the
  // surgery formula, so this compares the base inputs.
  r.add_check("eul_sum_equals_lambda_prime", eul - lambda_prime,
              {"eul_sum", "lambda_prime", "lambda"});
  if (prob.p == 1 && prob.q == 0) {
    r.add_check("trivial_filling", eul - prob.base_eul_sum, {"eul_sum"});
  }
  if (is_unknot_in_s3(prob)) {
    const LensSpace lens = LensSpace::from_unknot_surgery(prob.p, prob.q);
    r.add_check("unknot_lens_eul_sum", eul - sum(eul_lens(lens)), {"eul_sum"});
    r.add_check("unknot_lens_lambda", lambda - lambda_lens(lens), {"lambda"});
  }
  return r;
}

}  // namespace hfeul
