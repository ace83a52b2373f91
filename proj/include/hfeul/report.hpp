#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hfeul/rational.hpp"

namespace hfeul {

struct IdentityCheck {
  std::string name;
  Rational residual;
  bool pass() const { return residual.is_zero(); }
};

struct ReportValue {
  std::string name;
  Rational value;
  std::vector<std::string> identities;  // checks this value took part in
};

/// Computed invariants together with the identities they were checked
/// against.
struct InvariantReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> input;
  std::vector<ReportValue> values;
  std::vector<IdentityCheck> checks;

  void echo(std::string key, std::string value);
  void add_value(std::string name, Rational value,
                 std::vector<std::string> identities = {});
  /// Records a check and, if it passed, tags the named values with it.
  void add_check(std::string name, Rational residual,
                 const std::vector<std::string>& involves = {});

  bool all_pass() const;
};

enum class Format { text, json };

/// JSON: rationals as "num/den" strings, object keys sorted, stable across
/// runs. Text: an aligned table.
std::string emit_report(const InvariantReport& report, Format format);

}  // namespace hfeul
