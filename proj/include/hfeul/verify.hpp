#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hfeul/rational.hpp"
#include "hfeul/report.hpp"

namespace hfeul {

struct CaseFailure {
  std::int64_t p;  // or the case index, for suites not keyed by (p, q)
  std::int64_t q;
  Rational residual;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::int64_t pmax = 0;
  std::int64_t cases = 0;
  std::vector<CaseFailure> failures;  // ascending (p, q)

  bool pass() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<SuiteReport> suites;

  bool pass() const;
  std::int64_t failure_count() const;
};

/// reciprocity, lens-sum, lens-eul, surgery-cross, torsion-multiset,
/// hfmodel-trunc.
const std::vector<std::string>& suite_names();

/// Runs one named suite (not "all"). Throws precondition_error on an
/// unknown name or pmax < 2.
SuiteReport verify_suite(std::string_view name, std::int64_t pmax);

/// Runs `name`, expanding "all" to every suite.
VerifyReport verify(std::string_view name, std::int64_t pmax);

std::string emit_verify(const VerifyReport& report, Format format);

/// Number of single-tower cases in the randomized truncation sweep.
inline constexpr int kTruncationSamples = 1000;
inline constexpr std::int64_t kTruncationMaxN = 1000;

}  // namespace hfeul
