#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hfeul/hfmodel.hpp"
#include "hfeul/surgery.hpp"

namespace hfeul {

/// An HF^+ model plus the parameters of its truncation identity check.
struct ModelSpec {
  HFPlusModel model;
  std::int64_t p = 1;
  std::vector<Rational> base_rho_primes{Rational(0)};
  std::vector<std::int64_t> n_values;  // empty: use N0, N0+7, N0+100
};

struct SweepSpec {
  std::int64_t pmax = 50;
  std::vector<std::string> suites{"all"};
};

/// Problem files are JSON documents:
///
///   {
///     "surgery": {"p": 1, "q": -1, "d": 1, "tors": 1,
///                 "alex": "t - 1 + t^-1", "base_eul": "0", "base_lambda": "0"},
///     "hfmodel": {"towers": [{"label": "0", "bottom": "2"}],
///                 "reduced": [{"label": "0", "degree": "-1", "sign": -1}],
///                 "towerless": [], "p": 1, "base_rho_prime": ["0"],
///                 "N": [0, 7, 100]},
///     "sweep": {"pmax": 50, "suites": ["all"]}
///   }
///
/// Rationals are "num/den" strings or integer literals. "alex" is either the
/// polynomial text or a list of [i, a_i] pairs. Only "surgery" is required.
struct ProblemFile {
  SurgeryProblem surgery;
  std::optional<ModelSpec> hfmodel;
  std::optional<SweepSpec> sweep;
};

/// All problems found while loading a file, as (field, reason) pairs.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(std::vector<ValidationError> errors);
  validation_error(std::string field, std::string reason);
  const std::vector<ValidationError>& errors() const { return errors_; }

 private:
  std::vector<ValidationError> errors_;
};

ProblemFile parse_problem_text(std::string_view text);
ProblemFile parse_problem_file(const std::filesystem::path& path);

/// A model file holds the "hfmodel" object at top level; a problem file
/// with an "hfmodel" section is accepted too.
ModelSpec parse_model_text(std::string_view text);
ModelSpec parse_model_file(const std::filesystem::path& path);

}  // namespace hfeul
