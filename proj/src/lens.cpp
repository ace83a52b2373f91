#include "hfeul/lens.hpp"

#include <algorithm>
#include <string>

#include "hfeul/dedekind.hpp"
#include "hfeul/errors.hpp"

namespace hfeul {

namespace {

// d(S^3_{p/q}(unknot), i) negated, via the recursion
//   D(p,q,i) = (pq - (2i+1-p-q)^2) / (4pq) - D(q, p mod q, i mod q),
// D(1,0,0) = 0. Depth is the length of the continued fraction of p/q.
std::vector<Rational> correction_recursion(std::int64_t p, std::int64_t q) {
  if (p == 1) return {Rational(0)};
  const std::vector<Rational> inner = correction_recursion(q, p % q);
  const Integer P(static_cast<long>(p));
  const Integer Q(static_cast<long>(q));
  const Integer denom = 4 * P * Q;
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    const Integer shift = Integer(static_cast<long>(2 * i + 1)) - P - Q;
    out.push_back(Rational(P * Q - shift * shift, denom) -
                  inner[static_cast<std::size_t>(i % q)]);
  }
  return out;
}

// The function on Z/p whose Fourier coefficients are 1/((z-1)(z^q-1)) at
// z != 1 and 0 at z = 1. Multiplying a coefficient by z is the shift
// f(h) -> f(h+1), so this solves (S-1)(S^q-1) f = delta_0 - 1/p with
// sum f = 0: two passes of prefix sums, the second along the orbit of q.
std::vector<Rational> inverse_character_sum(std::int64_t p, std::int64_t q) {
  const auto n = static_cast<std::size_t>(p);
  std::vector<Rational> rhs(n, Rational(-1, p));
  rhs[0] += Rational(1);

  auto center = [&](std::vector<Rational>& v) {
    const Rational mean = sum(v) / Rational(p);
    for (auto& x : v) x -= mean;
  };

  std::vector<Rational> u(n);
  for (std::size_t h = 0; h + 1 < n; ++h) u[h + 1] = u[h] + rhs[h];
  center(u);

  std::vector<Rational> f(n);
  std::int64_t h = 0;
  for (std::int64_t k = 0; k + 1 < p; ++k) {
    const std::int64_t next = (h + q) % p;
    f[static_cast<std::size_t>(next)] =
        f[static_cast<std::size_t>(h)] + u[static_cast<std::size_t>(h)];
    h = next;
  }
  center(f);
  return f;
}

}  // namespace

LensSpace::LensSpace(std::int64_t p, std::int64_t q, int orientation)
    : p_(p), q_(0), orientation_(orientation) {
  if (p < 1) {
    throw precondition_error("lens space needs p >= 1, got " + std::to_string(p));
  }
  if (orientation != 1 && orientation != -1) {
    throw precondition_error("lens space orientation must be +1 or -1");
  }
  q_ = mod(q, p);
  if (gcd(q_, p) != 1) {
    throw precondition_error("lens space L(" + std::to_string(p) + "," +
                             std::to_string(q) + "): gcd(p,q) != 1");
  }
}

LensSpace LensSpace::from_unknot_surgery(std::int64_t p, std::int64_t q) {
  if (p == 0) throw precondition_error("0-surgery on the unknot is S^1 x S^2");
  return p > 0 ? LensSpace(p, q, -1) : LensSpace(-p, -q, -1);
}

std::vector<Rational> d_invariants(const LensSpace& lens) {
  std::vector<Rational> d = correction_recursion(lens.p(), lens.q());
  if (lens.orientation() < 0) {
    for (auto& x : d) x = -x;
  }
  return d;
}

SpincLabel conjugate(const LensSpace& lens, SpincLabel label) {
  return {mod(lens.q() - 1 - label.index, lens.p())};
}

Rational d_sum_check(std::int64_t p, std::int64_t q) {
  const LensSpace lens(p, q, -1);
  return sum(d_invariants(lens)) -
         Rational(p) * dedekind_sum(lens.q(), lens.p());
}

std::vector<Rational> eul_lens(const LensSpace& lens) {
  std::vector<Rational> eul = d_invariants(lens);
  for (auto& x : eul) x = -x / Rational(2);
  return eul;
}

Rational lambda_lens(const LensSpace& lens) {
  const Rational s = dedekind_sum(lens.q(), lens.p());
  return Rational(lens.orientation()) * s / Rational(2);
}

std::vector<Rational> torsion_function(const LensSpace& lens) {
  std::vector<Rational> tau = inverse_character_sum(lens.p(), lens.q());
  if (lens.orientation() < 0) {
    for (auto& x : tau) x = -x;
  }
  return tau;
}

std::vector<Rational> torsion_hat_multiset(const LensSpace& lens) {
  const Rational lambda = lambda_lens(lens);
  std::vector<Rational> out = torsion_function(lens);
  for (auto& x : out) x = lambda - x;
  return as_multiset(std::move(out));
}

std::vector<Rational> as_multiset(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  return values;
}

Rational sum(const std::vector<Rational>& values) {
  Rational total;
  for (const auto& x : values) total += x;
  return total;
}

}  // namespace hfeul
