#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hfeul {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// All invariants computed by this library live in Q, so this is the
/// value type everything else is written against. Arithmetic is backed by
/// GMP's mpq, which keeps the canonical form after every operation.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "n", "n/d", with optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// "num/den", integers as "n/1".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Rational abs(const Rational& x);

/// Converts to int64, throwing if out of range.
std::int64_t to_int64(const Integer& n);

}  // namespace hfeul
