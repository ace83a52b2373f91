#include "doctest.h"
#include "oracles.hpp"

#include "hfeul/alexander.hpp"
#include "hfeul/errors.hpp"

using namespace hfeul;

namespace {

std::map<std::int64_t, std::int64_t> plain(const SymmetricLaurent& a) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [i, c] : a.coefficients()) out[i] = to_int64(c);
  return out;
}

}  // namespace

TEST_CASE("bundled polynomials") {
  CHECK(SymmetricLaurent::unknot().str() == "[(0,1)]");
  CHECK(SymmetricLaurent::trefoil().str() == "[(0,-1),(1,1)]");
  CHECK(SymmetricLaurent::figure_eight().str() == "[(0,3),(1,-1)]");
  CHECK(SymmetricLaurent::trefoil().degree() == 1);
  CHECK(SymmetricLaurent::unknot().degree() == 0);
}

TEST_CASE("text and list forms parse to the same polynomial") {
  CHECK(SymmetricLaurent::parse("t - 1 + t^-1") == SymmetricLaurent::trefoil());
  CHECK(SymmetricLaurent::parse("-t + 3 - t^-1") == SymmetricLaurent::figure_eight());
  CHECK(SymmetricLaurent::parse("[(0,-1),(1,1)]") == SymmetricLaurent::trefoil());
  CHECK(SymmetricLaurent::parse("1") == SymmetricLaurent::unknot());
  CHECK(SymmetricLaurent::parse("2t^2 - 3t + 3 - 3t^-1 + 2t^-2").coefficient(2) == 2);
}

TEST_CASE("malformed or asymmetric polynomials are rejected") {
  CHECK_THROWS(SymmetricLaurent::parse("t + 1"));
  CHECK_THROWS(SymmetricLaurent::parse("t - 1 + 2t^-1"));
  CHECK_THROWS(SymmetricLaurent::parse("t^ + 1"));
  CHECK_THROWS(SymmetricLaurent::from_coefficients({{0, 1}, {0, 2}}));
  CHECK_THROWS(SymmetricLaurent::from_coefficients({{-1, 1}}));
}

TEST_CASE("value at one") {
  CHECK(evaluate_at_one(SymmetricLaurent::unknot()) == 1);
  CHECK(evaluate_at_one(SymmetricLaurent::trefoil()) == 1);
  CHECK(evaluate_at_one(SymmetricLaurent::figure_eight()) == 1);
  CHECK(evaluate_at_one(SymmetricLaurent::from_coefficients({{0, 0}, {1, 0}})) == 0);
}

TEST_CASE("second moment equals half the second derivative at one") {
  const std::vector<SymmetricLaurent> polys{
      SymmetricLaurent::unknot(), SymmetricLaurent::trefoil(),
      SymmetricLaurent::figure_eight(),
      SymmetricLaurent::parse("2t^2 - 3t + 3 - 3t^-1 + 2t^-2"),
      SymmetricLaurent::parse("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3")};
  for (const auto& a : polys) {
    CAPTURE(a.str());
    CHECK(Rational(second_moment(a)) * Rational(2) ==
          oracle::second_derivative_at_one(plain(a)));
  }
  CHECK(second_moment(SymmetricLaurent::trefoil()) == 1);
  CHECK(second_moment(SymmetricLaurent::figure_eight()) == -1);
}

TEST_CASE("normalization against the torsion order") {
  CHECK(check_normalization(SymmetricLaurent::trefoil(), 1));
  CHECK_FALSE(check_normalization(SymmetricLaurent::trefoil(), 3));
  CHECK(check_normalization(SymmetricLaurent::parse("2t - 1 + 2t^-1"), 3));
}
