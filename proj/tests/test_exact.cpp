#include "doctest.h"
#include "oracles.hpp"

#include "hfeul/dedekind.hpp"
#include "hfeul/errors.hpp"
#include "hfeul/rational.hpp"

using namespace hfeul;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("7/-14"), parse_error);
  CHECK(Rational(6, 3).str() == "2/1");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(-3, 9).str() == "-1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), parse_error);
  CHECK_THROWS_AS(Rational::parse("abc"), parse_error);
  CHECK_THROWS_AS(Rational(1, 0), precondition_error);
}

TEST_CASE("floor and ceil round toward the right side") {
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(5)) == 5);
  CHECK(ceil(Rational(-5)) == -5);
}

TEST_CASE("sawtooth") {
  CHECK(sawtooth(Rational(0)) == Rational(0));
  CHECK(sawtooth(Rational(3)) == Rational(0));
  CHECK(sawtooth(Rational(1, 3)) == Rational(-1, 6));
  CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));
  CHECK(sawtooth(Rational(7, 4)) == Rational(1, 4));
}

TEST_CASE("small Dedekind sums") {
  CHECK(dedekind_sum(0, 1) == Rational(0));
  CHECK(dedekind_sum(1, 2) == Rational(0));
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
  CHECK(dedekind_sum(1, 5) == Rational(1, 5));
}

TEST_CASE("Dedekind sum agrees with the sawtooth definition") {
  for (std::int64_t p = 1; p <= 60; ++p) {
    for (std::int64_t q = -p; q <= 2 * p; ++q) {
      if (gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(dedekind_sum(q, p) == oracle::dedekind(q, p));
    }
  }
}

TEST_CASE("Dedekind sum is periodic and odd in q") {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      CHECK(dedekind_sum(q + 3 * p, p) == dedekind_sum(q, p));
      CHECK(dedekind_sum(-q, p) == -dedekind_sum(q, p));
    }
  }
}

TEST_CASE("reciprocity holds for coprime pairs up to 200") {
  std::int64_t failures = 0;
  for (std::int64_t p = 1; p <= 200; ++p) {
    for (std::int64_t q = 1; q <= 200; ++q) {
      if (gcd(p, q) == 1 && !reciprocity_residual(p, q).is_zero()) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("Dedekind sum rejects bad arguments") {
  CHECK_THROWS_AS(dedekind_sum(2, 4), precondition_error);
  CHECK_THROWS_AS(dedekind_sum(1, 0), precondition_error);
  CHECK_THROWS_AS(reciprocity_residual(6, 9), precondition_error);
}

TEST_CASE("reduce_mod_two lands in [0, 2)") {
  CHECK(reduce_mod_two(Rational(5, 2)) == Rational(1, 2));
  CHECK(reduce_mod_two(Rational(-1, 4)) == Rational(7, 4));
  CHECK(reduce_mod_two(Rational(2)) == Rational(0));
  CHECK(reduce_mod_two(Rational(-3)) == Rational(1));
  for (std::int64_t n = -60; n <= 60; ++n) {
    const Rational x(n, 7);
    const Rational r = reduce_mod_two(x);
    CHECK(r >= Rational(0));
    CHECK(r < Rational(2));
    CHECK(((x - r) / Rational(2)).is_integer());
  }
}

TEST_CASE("gcd and mod") {
  CHECK(gcd(12, -18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(10, 5) == 0);
}
