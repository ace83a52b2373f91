#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hfeul/rational.hpp"

namespace hfeul {

/// Symmetrized Alexander polynomial a_0 + sum_{i>=1} a_i (t^i + t^-i).
///
/// Only the coefficients with i >= 0 are stored, so symmetry holds by
/// construction. Zero coefficients are dropped.
class SymmetricLaurent {
 public:
  SymmetricLaurent() = default;

  /// Throws precondition_error on a negative or repeated index.
  static SymmetricLaurent from_coefficients(
      const std::vector<std::pair<std::int64_t, Integer>>& coefficients);

  /// Parses either the polynomial text form ("t - 1 + t^-1",
  /// "-2t^2 + 5 - 2t^-2") or the canonical list "[(0,-1),(1,1)]".
  /// The text form must already be symmetric.
  static SymmetricLaurent parse(std::string_view text);

  static SymmetricLaurent unknot();
  static SymmetricLaurent trefoil();
  static SymmetricLaurent figure_eight();

  Integer coefficient(std::int64_t i) const;
  std::int64_t degree() const;
  const std::map<std::int64_t, Integer>& coefficients() const { return coeffs_; }

  /// Canonical list form "[(0,a_0),(1,a_1),...]", sorted by index.
  std::string str() const;
  /// Human-readable "a_d t^d + ... + a_0 + ... + a_d t^-d".
  std::string pretty() const;

  friend bool operator==(const SymmetricLaurent&,
                         const SymmetricLaurent&) = default;

 private:
  std::map<std::int64_t, Integer> coeffs_;
};

Integer evaluate_at_one(const SymmetricLaurent& a);

/// sum_{i>=1} a_i i^2.
Integer second_moment(const SymmetricLaurent& a);

bool check_normalization(const SymmetricLaurent& a, const Integer& torsion_order);

}  // namespace hfeul
