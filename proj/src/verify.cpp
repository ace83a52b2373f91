#include "hfeul/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <tuple>

#include "hfeul/dedekind.hpp"
#include "hfeul/errors.hpp"
#include "hfeul/hfmodel.hpp"
#include "hfeul/lens.hpp"
#include "hfeul/surgery.hpp"
#include "json.hpp"

namespace hfeul {

namespace {

constexpr std::size_t kMaxListedFailures = 20;
constexpr std::uint64_t kTruncationSeed = 0x5eed'2003'0405ULL;

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, std::int64_t pmax) {
    report_.name = std::move(name);
    report_.pmax = pmax;
  }

  void record(std::int64_t p, std::int64_t q, const Rational& residual,
              std::string detail = {}) {
    ++report_.cases;
    if (!residual.is_zero()) {
      report_.failures.push_back({p, q, residual, std::move(detail)});
    }
  }

  SuiteReport finish() {
    std::stable_sort(report_.failures.begin(), report_.failures.end(),
                     [](const CaseFailure& a, const CaseFailure& b) {
                       return std::tie(a.p, a.q) < std::tie(b.p, b.q);
                     });
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

// Lexicographic (p, q) with 2 <= p <= pmax, 0 < q < p, gcd = 1.
void for_each_lens(std::int64_t pmax,
                   const std::function<void(std::int64_t, std::int64_t)>& fn) {
  for (std::int64_t p = 2; p <= pmax; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) == 1) fn(p, q);
    }
  }
}

Rational count_mismatches(const std::vector<Rational>& a,
                          const std::vector<Rational>& b) {
  if (a.size() != b.size()) return Rational(static_cast<std::int64_t>(
      std::max(a.size(), b.size())));
  std::int64_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i] ? 1 : 0;
  return Rational(n);
}

SuiteReport reciprocity_suite(std::int64_t pmax) {
  SuiteBuilder s("reciprocity", pmax);
  for (std::int64_t p = 1; p <= pmax; ++p) {
    for (std::int64_t q = 1; q <= pmax; ++q) {
      if (gcd(p, q) == 1) s.record(p, q, reciprocity_residual(p, q));
    }
  }
  return s.finish();
}

SuiteReport lens_sum_suite(std::int64_t pmax) {
  SuiteBuilder s("lens-sum", pmax);
  for_each_lens(pmax, [&](std::int64_t p, std::int64_t q) {
    s.record(p, q, d_sum_check(p, q), "sum d(L(-p,q)) - p s(q,p)");
  });
  return s.finish();
}

SuiteReport lens_eul_suite(std::int64_t pmax) {
  SuiteBuilder s("lens-eul", pmax);
  for_each_lens(pmax, [&](std::int64_t p, std::int64_t q) {
    const LensSpace lens(p, q, -1);
    const auto eul = eul_lens(lens);
    const auto d = d_invariants(lens);
    const Rational sdk = dedekind_sum(q, p);

    const Rational sum_residual = sum(eul) + Rational(p) * sdk / Rational(2);
    const Rational lambda_residual = sum(eul) - Rational(p) * lambda_lens(lens);

    auto mirrored = eul_lens(lens.reversed());
    for (auto& x : mirrored) x = -x;
    const Rational orientation_residual = count_mismatches(eul, mirrored) +
        abs(lambda_lens(lens.reversed()) + lambda_lens(lens));

    std::int64_t conj = 0;
    for (std::int64_t i = 0; i < p; ++i) {
      const auto j = conjugate(lens, {i}).index;
      conj += d[static_cast<std::size_t>(i)] != d[static_cast<std::size_t>(j)];
    }

    std::string detail;
    if (!sum_residual.is_zero()) detail += "sum Eul + p s(q,p)/2; ";
    if (!lambda_residual.is_zero()) detail += "sum Eul - p lambda; ";
    if (!orientation_residual.is_zero()) detail += "orientation reversal; ";
    if (conj != 0) detail += "conjugation symmetry; ";
    s.record(p, q,
             abs(sum_residual) + abs(lambda_residual) + orientation_residual +
                 Rational(conj),
             detail);
  });
  return s.finish();
}

SuiteReport surgery_cross_suite(std::int64_t pmax) {
  SuiteBuilder s("surgery-cross", pmax);
  const auto residuals = cross_check_lens(pmax);
  for (const auto& r : residuals) {
    const auto prob = SurgeryProblem::in_s3(SymmetricLaurent::unknot(), r.p, r.q);
    const LensSpace lens = LensSpace::from_unknot_surgery(r.p, r.q);
    const Rational lambda_residual =
        lambda_prime_after_surgery(prob) - Rational(r.p) * lambda_lens(lens);
    const Rational d_residual =
        eul_sum_after_surgery(prob) + sum(d_invariants(lens)) / Rational(2);
    std::string detail;
    if (!r.residual.is_zero()) detail += "surgery formula vs sum Eul(L); ";
    if (!lambda_residual.is_zero()) detail += "lambda' vs |H1| lambda(L); ";
    if (!d_residual.is_zero()) detail += "surgery formula vs -sum d/2; ";
    s.record(r.p, r.q, abs(r.residual) + abs(lambda_residual) + abs(d_residual),
             detail);
  }
  return s.finish();
}

SuiteReport torsion_suite(std::int64_t pmax) {
  SuiteBuilder s("torsion-multiset", pmax);
  for_each_lens(pmax, [&](std::int64_t p, std::int64_t q) {
    for (const int orientation : {-1, +1}) {
      const LensSpace lens(p, q, orientation);
      const Rational mismatch = count_mismatches(
          torsion_hat_multiset(lens), as_multiset(eul_lens(lens)));
      s.record(p, orientation * q, mismatch,
               "multiset {Eul} vs {-tau + lambda}, orientation " +
                   std::to_string(orientation));
    }
  });
  return s.finish();
}

SuiteReport truncation_suite(std::int64_t pmax) {
  SuiteBuilder s("hfmodel-trunc", pmax);

  std::mt19937_64 rng(kTruncationSeed);
  std::uniform_int_distribution<std::int64_t> num(-2000, 2000);
  std::uniform_int_distribution<std::int64_t> den(1, 24);
  for (int i = 0; i < kTruncationSamples; ++i) {
    const Rational bottom(num(rng), den(rng));
    const Rational rho = rho_prime_from_d(bottom);
    std::uniform_int_distribution<std::int64_t> level(
        minimal_truncation_level(bottom, rho), kTruncationMaxN);
    const std::int64_t n = level(rng);
    const HFPlusModel model({{"t", bottom}}, {});
    const Integer by_formula = truncated_chi_formula(bottom, rho, n);
    const Integer by_count = truncated_chi_enumerate(model, {{"t", rho}}, n);
    s.record(i, n, Rational(Integer(by_formula - by_count)),
             "single tower, bottom " + bottom.str());
  }

  const auto models = bundled_models(std::min<std::int64_t>(pmax, 12));
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const std::int64_t n0 = m.model.stable_cutoff();
    const auto idx = static_cast<std::int64_t>(kTruncationSamples + i);
    try {
      euler_red_identity_check(m.model, m.p, m.base_rho_primes,
                               {n0, n0 + 7, n0 + 100});
      s.record(idx, n0, Rational(0));
    } catch (const identity_error& e) {
      s.record(idx, n0, Rational(1), m.name + ": " + e.what());
    }
  }
  return s.finish();
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteReport& s) { return s.pass(); });
}

std::int64_t VerifyReport::failure_count() const {
  std::int64_t n = 0;
  for (const auto& s : suites) n += static_cast<std::int64_t>(s.failures.size());
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "reciprocity",   "lens-sum",         "lens-eul",
      "surgery-cross", "torsion-multiset", "hfmodel-trunc"};
  return names;
}

SuiteReport verify_suite(std::string_view name, std::int64_t pmax) {
  if (pmax < 2) throw precondition_error("verify: pmax must be >= 2");
  if (name == "reciprocity") return reciprocity_suite(pmax);
  if (name == "lens-sum") return lens_sum_suite(pmax);
  if (name == "lens-eul") return lens_eul_suite(pmax);
  if (name == "surgery-cross") return surgery_cross_suite(pmax);
  if (name == "torsion-multiset") return torsion_suite(pmax);
  if (name == "hfmodel-trunc") return truncation_suite(pmax);
  throw precondition_error("unknown suite '" + std::string(name) + "'");
}

VerifyReport verify(std::string_view name, std::int64_t pmax) {
  VerifyReport out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.suites.push_back(verify_suite(n, pmax));
  } else {
    out.suites.push_back(verify_suite(name, pmax));
  }
  return out;
}

std::string emit_verify(const VerifyReport& report, Format format) {
  if (format == Format::json) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : report.suites) {
      nlohmann::json failures = nlohmann::json::array();
      for (std::size_t i = 0; i < s.failures.size() && i < kMaxListedFailures; ++i) {
        const auto& f = s.failures[i];
        failures.push_back({{"p", f.p},
                            {"q", f.q},
                            {"residual", f.residual.str()},
                            {"detail", f.detail}});
      }
      suites.push_back({{"name", s.name},
                        {"pmax", s.pmax},
                        {"cases", s.cases},
                        {"failure_count", s.failures.size()},
                        {"failures", failures}});
    }
    nlohmann::json out = {{"command", "verify"},
                          {"suites", suites},
                          {"failure_count", report.failure_count()},
                          {"ok", report.pass()}};
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "# verify\n";
  std::size_t width = 5;
  for (const auto& s : report.suites) width = std::max(width, s.name.size());
  for (const auto& s : report.suites) {
    os << "  " << s.name << std::string(width - s.name.size() + 2, ' ')
       << "cases " << s.cases << "  failures " << s.failures.size() << '\n';
    for (std::size_t i = 0; i < s.failures.size() && i < kMaxListedFailures; ++i) {
      const auto& f = s.failures[i];
      os << "    (" << f.p << ", " << f.q << ")  residual " << f.residual.str();
      if (!f.detail.empty()) os << "  " << f.detail;
      os << '\n';
    }
  }
  os << "total failures: " << report.failure_count() << '\n';
  return os.str();
}

}  // namespace hfeul
