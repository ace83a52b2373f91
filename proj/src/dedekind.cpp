#include "hfeul/dedekind.hpp"

#include <numeric>
#include <string>

#include "hfeul/errors.hpp"

namespace hfeul {

namespace {

// Keeps k * q below 2^62 in the summation loop.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(floor(x)) - Rational(1, 2);
}

Rational dedekind_sum(std::int64_t q, std::int64_t p) {
  if (p < 1) {
    throw precondition_error("dedekind_sum: modulus must be >= 1, got " +
                             std::to_string(p));
  }
  if (p > kMaxModulus) {
    throw precondition_error("dedekind_sum: modulus " + std::to_string(p) +
                             " exceeds " + std::to_string(kMaxModulus));
  }
  const std::int64_t r = mod(q, p);
  if (gcd(r, p) != 1) {
    throw precondition_error("dedekind_sum: gcd(" + std::to_string(q) + ", " +
                             std::to_string(p) + ") != 1");
  }
  // For 0 < k < p, ((k/p)) = (2k - p) / (2p). Coprimality keeps kq mod p
  // away from zero, so both factors use that form and the whole sum has
  // denominator 4p^2.
  Integer acc = 0;
  for (std::int64_t k = 1; k < p; ++k) {
    const std::int64_t kq = (k * r) % p;
    const Integer a(static_cast<long>(2 * k - p));
    const Integer b(static_cast<long>(2 * kq - p));
    acc += a * b;
  }
  const Integer pp(static_cast<long>(p));
  return Rational(acc, 4 * pp * pp);
}

Rational reciprocity_residual(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) {
    throw precondition_error("reciprocity_residual: arguments must be positive");
  }
  if (gcd(p, q) != 1) {
    throw precondition_error("reciprocity_residual: gcd(" + std::to_string(p) +
                             ", " + std::to_string(q) + ") != 1");
  }
  const Rational P(p);
  const Rational Q(q);
  const Rational closed =
      Rational(-1, 4) + (P / Q + Q / P + Rational(1) / (P * Q)) / Rational(12);
  return dedekind_sum(p, q) + dedekind_sum(q, p) - closed;
}

Rational reduce_mod_two(const Rational& x) {
  return x - Rational(2) * Rational(floor(x / Rational(2)));
}

}  // namespace hfeul
