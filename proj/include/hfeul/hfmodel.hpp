#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hfeul/rational.hpp"

namespace hfeul {

using SpincId = std::string;

/// Image of HF^infinity for one Spin^c structure: degrees bottom + 2k, k >= 0.
struct TowerSummand {
  SpincId spinc_id;
  Rational bottom_degree;  // the correction term d(Y, t)
};

/// A generator of the reduced part, with its contribution to the
/// Z/2-graded Euler characteristic.
struct ReducedGenerator {
  SpincId spinc_id;
  Rational degree;
  int sign = 1;
};

/// Desk-scale model of HF^+: one tower per torsion Spin^c structure plus a
/// finite signed reduced part.
///
/// Labels listed in `towerless` are non-torsion structures (the b1 = 1
/// case); they carry reduced generators but no tower, and the truncated
/// Euler characteristic counts them in full.
class HFPlusModel {
 public:
  HFPlusModel() = default;
  HFPlusModel(std::vector<TowerSummand> towers,
              std::vector<ReducedGenerator> reduced,
              std::vector<SpincId> towerless = {});

  const std::vector<TowerSummand>& towers() const { return towers_; }
  const std::vector<ReducedGenerator>& reduced() const { return reduced_; }
  const std::vector<SpincId>& towerless() const { return towerless_; }

  bool has_tower(const SpincId& id) const;
  const TowerSummand& tower(const SpincId& id) const;

  /// Smallest N such that every reduced generator sits at or below the
  /// cutoff 2N + rho'(t) of its structure (max(0, ceil(max degree))) and no
  /// tower starts beyond 2N + 2 + rho'(t).
  std::int64_t stable_cutoff() const;

 private:
  std::vector<TowerSummand> towers_;
  std::vector<ReducedGenerator> reduced_;
  std::vector<SpincId> towerless_;
};

/// Disjoint union; the label sets must not overlap.
HFPlusModel disjoint_union(const HFPlusModel& a, const HFPlusModel& b);

/// rho'(d): the representative of d mod 2Z in [0, 2).
Rational rho_prime_from_d(const Rational& d);

/// Number of tower degrees in [d, 2N + rho'], i.e. N + 1 - ceil((d - rho')/2).
/// Requires d - rho' in 2Z and N >= minimal_truncation_level(d, rho'); below
/// that the tower lies entirely above the cutoff and the closed form would
/// go negative.
Integer truncated_chi_formula(const Rational& d, const Rational& rho_prime,
                              std::int64_t n);

/// Smallest N >= 0 at which truncated_chi_formula applies.
std::int64_t minimal_truncation_level(const Rational& d, const Rational& rho_prime);

/// Brute-force count of chi(HF^+_{<= 2N}): walks each tower upward from its
/// bottom while the degree stays <= 2N + rho'(t), then adds the signs of
/// reduced generators under the same cutoff. Tower-less labels contribute
/// all their reduced generators.
Integer truncated_chi_enumerate(const HFPlusModel& model,
                                const std::map<SpincId, Rational>& rho_prime,
                                std::int64_t n);

/// rho' of every tower, from its bottom degree.
std::map<SpincId, Rational> tower_rho_primes(const HFPlusModel& model);

/// Eul(Y, t) = chi(HF^+_red(Y, t)) - d(Y, t)/2.
Rational eul_of_model(const HFPlusModel& model, const SpincId& id);

/// Sum of Eul over all tower labels.
Rational eul_sum(const HFPlusModel& model);

/// k = chi(HF^+_{<= 2N}) - N |Spin^c| - sum Eul - p sum rho'_base / 2,
/// evaluated at each N in `n_values`; throws identity_error if the value
/// changes with N, precondition_error if some N is below stable_cutoff().
Rational euler_red_identity_check(const HFPlusModel& model, std::int64_t p,
                                  const std::vector<Rational>& base_rho_primes,
                                  const std::vector<std::int64_t>& n_values);

/// A model bundled with the data needed to run the identity check on it.
struct BundledModel {
  std::string name;
  HFPlusModel model;
  std::int64_t p = 1;
  std::vector<Rational> base_rho_primes;
};

/// Reference models: lens spaces from unknot surgery, the Poincare sphere
/// with both orientations, Sigma(2,3,7), and a b1 = 1 style model.
std::vector<BundledModel> bundled_models(std::int64_t max_lens_p = 12);

/// Model of HF^+ of a lens space: towers at its correction terms, no
/// reduced part.
HFPlusModel lens_model(std::int64_t p, std::int64_t q, int orientation);

}  // namespace hfeul
