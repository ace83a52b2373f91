#pragma once

#include <cstdint>

#include "hfeul/rational.hpp"

namespace hfeul {

/// The sawtooth ((x)): zero on integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).
///
/// The second argument is the modulus. q may be any integer; it is reduced
/// mod p first, and the reduced value must be coprime to p. A negative
/// modulus is rejected here; callers that need s(q, -p) pass |p|.
Rational dedekind_sum(std::int64_t q, std::int64_t p);

/// s(p,q) + s(q,p) minus the reciprocity closed form
/// -1/4 + (p/q + q/p + 1/(pq))/12. Zero whenever dedekind_sum is right.
Rational reciprocity_residual(std::int64_t p, std::int64_t q);

/// Representative of x mod 2Z in [0, 2).
Rational reduce_mod_two(const Rational& x);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Non-negative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

}  // namespace hfeul
