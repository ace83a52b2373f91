#include "hfeul/hfmodel.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "hfeul/dedekind.hpp"
#include "hfeul/errors.hpp"
#include "hfeul/lens.hpp"

namespace hfeul {

HFPlusModel::HFPlusModel(std::vector<TowerSummand> towers,
                         std::vector<ReducedGenerator> reduced,
                         std::vector<SpincId> towerless)
    : towers_(std::move(towers)),
      reduced_(std::move(reduced)),
      towerless_(std::move(towerless)) {
  std::set<SpincId> labels;
  for (const auto& t : towers_) {
    if (!labels.insert(t.spinc_id).second) {
      throw precondition_error("duplicate Spin^c label '" + t.spinc_id + "'");
    }
  }
  for (const auto& id : towerless_) {
    if (!labels.insert(id).second) {
      throw precondition_error("duplicate Spin^c label '" + id + "'");
    }
  }
  for (const auto& g : reduced_) {
    if (labels.count(g.spinc_id) == 0) {
      throw precondition_error("reduced generator has unknown Spin^c label '" +
                               g.spinc_id + "'");
    }
    if (g.sign != 1 && g.sign != -1) {
      throw precondition_error("reduced generator sign must be +1 or -1");
    }
  }
}

bool HFPlusModel::has_tower(const SpincId& id) const {
  return std::any_of(towers_.begin(), towers_.end(),
                     [&](const TowerSummand& t) { return t.spinc_id == id; });
}

const TowerSummand& HFPlusModel::tower(const SpincId& id) const {
  for (const auto& t : towers_) {
    if (t.spinc_id == id) return t;
  }
  throw precondition_error("no tower with Spin^c label '" + id + "'");
}

std::int64_t HFPlusModel::stable_cutoff() const {
  std::int64_t n0 = 0;
  for (const auto& g : reduced_) {
    if (!has_tower(g.spinc_id)) continue;
    n0 = std::max(n0, to_int64(ceil(g.degree)));
  }
  for (const auto& t : towers_) {
    n0 = std::max(n0, minimal_truncation_level(t.bottom_degree,
                                               rho_prime_from_d(t.bottom_degree)));
  }
  return n0;
}

HFPlusModel disjoint_union(const HFPlusModel& a, const HFPlusModel& b) {
  auto towers = a.towers();
  towers.insert(towers.end(), b.towers().begin(), b.towers().end());
  auto reduced = a.reduced();
  reduced.insert(reduced.end(), b.reduced().begin(), b.reduced().end());
  auto towerless = a.towerless();
  towerless.insert(towerless.end(), b.towerless().begin(), b.towerless().end());
  return HFPlusModel(std::move(towers), std::move(reduced), std::move(towerless));
}

Rational rho_prime_from_d(const Rational& d) { return reduce_mod_two(d); }

Integer truncated_chi_formula(const Rational& d, const Rational& rho_prime,
                              std::int64_t n) {
  if (n < 0) throw precondition_error("truncation level N must be >= 0");
  const Rational gap = (d - rho_prime) / Rational(2);
  if (!gap.is_integer()) {
    throw precondition_error("tower bottom " + d.str() +
                             " is not congruent to rho' " + rho_prime.str() +
                             " mod 2");
  }
  const Integer count = Integer(static_cast<long>(n)) + 1 - ceil(gap);
  if (count < 0) {
    throw precondition_error("tower bottom " + d.str() + " lies above 2N + 2 + rho' for N = " +
                             std::to_string(n));
  }
  return count;
}

std::int64_t minimal_truncation_level(const Rational& d, const Rational& rho_prime) {
  const Integer gap = ceil((d - rho_prime) / Rational(2));
  return std::max<std::int64_t>(0, to_int64(gap) - 1);
}

Integer truncated_chi_enumerate(const HFPlusModel& model,
                                const std::map<SpincId, Rational>& rho_prime,
                                std::int64_t n) {
  if (n < 0) throw precondition_error("truncation level N must be >= 0");
  auto cutoff_for = [&](const SpincId& id) {
    const auto it = rho_prime.find(id);
    if (it == rho_prime.end()) {
      throw precondition_error("no rho' given for Spin^c label '" + id + "'");
    }
    return Rational(2 * n) + it->second;
  };

  Integer chi = 0;
  for (const auto& t : model.towers()) {
    const Rational cutoff = cutoff_for(t.spinc_id);
    for (Rational degree = t.bottom_degree; degree <= cutoff;
         degree += Rational(2)) {
      ++chi;
    }
  }
  for (const auto& g : model.reduced()) {
    if (!model.has_tower(g.spinc_id) || g.degree <= cutoff_for(g.spinc_id)) {
      chi += g.sign;
    }
  }
  return chi;
}

std::map<SpincId, Rational> tower_rho_primes(const HFPlusModel& model) {
  std::map<SpincId, Rational> out;
  for (const auto& t : model.towers()) {
    out[t.spinc_id] = rho_prime_from_d(t.bottom_degree);
  }
  return out;
}

Rational eul_of_model(const HFPlusModel& model, const SpincId& id) {
  const TowerSummand& t = model.tower(id);
  Rational chi_red;
  for (const auto& g : model.reduced()) {
    if (g.spinc_id == id) chi_red += Rational(g.sign);
  }
  return chi_red - t.bottom_degree / Rational(2);
}

Rational eul_sum(const HFPlusModel& model) {
  Rational total;
  for (const auto& t : model.towers()) total += eul_of_model(model, t.spinc_id);
  return total;
}

Rational euler_red_identity_check(const HFPlusModel& model, std::int64_t p,
                                  const std::vector<Rational>& base_rho_primes,
                                  const std::vector<std::int64_t>& n_values) {
  if (n_values.empty()) throw precondition_error("empty list of N values");
  const std::int64_t n0 = model.stable_cutoff();
  const auto rho = tower_rho_primes(model);
  const Rational base_term = Rational(p) * sum(base_rho_primes) / Rational(2);
  const Rational eul = eul_sum(model);
  const auto structures = static_cast<std::int64_t>(model.towers().size());

  std::optional<Rational> common;
  for (const std::int64_t n : n_values) {
    if (n < n0) {
      throw precondition_error("N = " + std::to_string(n) +
                               " is below the stable cutoff " +
                               std::to_string(n0));
    }
    const Rational k = Rational(truncated_chi_enumerate(model, rho, n)) -
                       Rational(n * structures) - eul - base_term;
    if (common && *common != k) {
      throw identity_error("truncated Euler characteristic offset depends on N: " +
                           common->str() + " vs " + k.str() + " at N = " +
                           std::to_string(n));
    }
    common = k;
  }
  return *common;
}

HFPlusModel lens_model(std::int64_t p, std::int64_t q, int orientation) {
  const auto d = d_invariants(LensSpace(p, q, orientation));
  std::vector<TowerSummand> towers;
  for (std::size_t i = 0; i < d.size(); ++i) {
    towers.push_back({std::to_string(i), d[i]});
  }
  return HFPlusModel(std::move(towers), {});
}

std::vector<BundledModel> bundled_models(std::int64_t max_lens_p) {
  std::vector<BundledModel> out;
  const std::vector<Rational> sphere{Rational(0)};

  out.push_back({"S3", HFPlusModel({{"0", Rational(0)}}, {}), 1, sphere});
  // Sigma(2,3,5) bounds the negative definite E8 plumbing: d = 2, no
  // reduced part, Eul = -1.
  out.push_back({"Sigma(2,3,5)", HFPlusModel({{"0", Rational(2)}}, {}), -1, sphere});
  out.push_back({"-Sigma(2,3,5)", HFPlusModel({{"0", Rational(-2)}}, {}), 1, sphere});
  // d = 0 and a single odd reduced generator: Eul = -1 = lambda.
  out.push_back({"Sigma(2,3,7)",
                 HFPlusModel({{"0", Rational(0)}}, {{"0", Rational(-1), -1}}),
                 -1, sphere});

  for (std::int64_t p = 2; p <= max_lens_p; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      out.push_back({"L(-" + std::to_string(p) + "," + std::to_string(q) + ")",
                     lens_model(p, q, -1), p, sphere});
    }
  }

  // L(-3,1) towers with extra reduced generators of both parities.
  {
    const HFPlusModel base = lens_model(3, 1, -1);
    out.push_back({"L(-3,1)+reduced",
                   HFPlusModel(base.towers(),
                               {{"0", Rational(5, 2), 1},
                                {"1", Rational(23, 6), -1},
                                {"2", Rational(-13, 6), 1}}),
                   3, sphere});
  }
  // One torsion tower plus a tower-less structure, as for b1 = 1.
  out.push_back({"b1=1",
                 HFPlusModel({{"t", Rational(-1, 2)}},
                             {{"t", Rational(3, 2), 1},
                              {"s", Rational(1, 2), 1},
                              {"s", Rational(5, 2), -1},
                              {"s", Rational(9, 2), 1}},
                             {"s"}),
                 2, {Rational(0), Rational(1, 2)}});
  return out;
}

}  // namespace hfeul
