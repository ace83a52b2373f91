#include "doctest.h"

#include "hfeul/errors.hpp"
#include "hfeul/hfmodel.hpp"
#include "hfeul/lens.hpp"

using namespace hfeul;

TEST_CASE("rho prime") {
  CHECK(rho_prime_from_d(Rational(7, 4)) == Rational(7, 4));
  CHECK(rho_prime_from_d(Rational(-1, 4)) == Rational(7, 4));
  CHECK(rho_prime_from_d(Rational(2)) == Rational(0));
}

TEST_CASE("closed-form tower count") {
  CHECK(truncated_chi_formula(Rational(7, 4), Rational(7, 4), 0) == 1);
  CHECK(truncated_chi_formula(Rational(0), Rational(0), 5) == 6);
  CHECK(truncated_chi_formula(Rational(-4), Rational(0), 0) == 3);
  CHECK(truncated_chi_formula(Rational(2), Rational(0), 0) == 0);
  CHECK_THROWS_AS(truncated_chi_formula(Rational(1, 2), Rational(0), 3), precondition_error);
  CHECK_THROWS_AS(truncated_chi_formula(Rational(10), Rational(0), 1), precondition_error);
  CHECK(minimal_truncation_level(Rational(10), Rational(0)) == 4);
  CHECK(minimal_truncation_level(Rational(-10), Rational(0)) == 0);
}

TEST_CASE("closed form agrees with walking the tower") {
  for (std::int64_t num = -60; num <= 60; ++num) {
    for (const std::int64_t den : {1, 3, 4, 7}) {
      const Rational bottom(num, den);
      const Rational rho = rho_prime_from_d(bottom);
      const HFPlusModel m({{"t", bottom}}, {});
      for (std::int64_t n = minimal_truncation_level(bottom, rho); n <= 40; ++n) {
        CHECK(truncated_chi_formula(bottom, rho, n) ==
              truncated_chi_enumerate(m, {{"t", rho}}, n));
      }
    }
  }
}

TEST_CASE("enumeration counts reduced generators under the cutoff") {
  const HFPlusModel m({{"0", Rational(0)}},
                      {{"0", Rational(-1), -1}, {"0", Rational(5), 1}});
  const std::map<SpincId, Rational> rho{{"0", Rational(0)}};
  // N = 1: tower degrees 0, 2 and the generator at -1.
  CHECK(truncated_chi_enumerate(m, rho, 1) == 1);
  // N = 3: tower 0..6, both generators.
  CHECK(truncated_chi_enumerate(m, rho, 3) == 4);
  CHECK(m.stable_cutoff() == 5);
}

TEST_CASE("Eul of a model") {
  const HFPlusModel m({{"0", Rational(0)}}, {{"0", Rational(-1), -1}});
  CHECK(eul_of_model(m, "0") == Rational(-1));
  const HFPlusModel p({{"0", Rational(2)}}, {});
  CHECK(eul_of_model(p, "0") == Rational(-1));
  CHECK_THROWS_AS(eul_of_model(p, "9"), precondition_error);
}

TEST_CASE("identity check on RP3") {
  const HFPlusModel rp3 = lens_model(2, 1, 1);
  const Rational k = euler_red_identity_check(rp3, 2, {Rational(0)}, {5, 9, 23});
  CHECK(k == Rational(3));
}

TEST_CASE("identity check on S3") {
  const HFPlusModel s3({{"0", Rational(0)}}, {});
  CHECK(euler_red_identity_check(s3, 1, {Rational(0)}, {0, 7, 100}) == Rational(1));
}

TEST_CASE("identity check refuses N below the cutoff") {
  const HFPlusModel m({{"0", Rational(0)}}, {{"0", Rational(3), 1}});
  CHECK_THROWS_AS(euler_red_identity_check(m, 1, {Rational(0)}, {1, 5}), precondition_error);
  CHECK_THROWS_AS(euler_red_identity_check(m, 1, {Rational(0)}, {}), precondition_error);
}

TEST_CASE("high tower bottoms raise the cutoff") {
  const HFPlusModel m({{"0", Rational(20)}}, {});
  CHECK(m.stable_cutoff() == 9);
  const Rational k = euler_red_identity_check(m, 1, {Rational(0)}, {9, 16, 109});
  CHECK(k == Rational(1));
}

TEST_CASE("k is additive under disjoint union") {
  const HFPlusModel a({{"a", Rational(1, 2)}}, {{"a", Rational(-3, 2), 1}});
  const HFPlusModel b({{"b", Rational(-2)}}, {{"b", Rational(0), -1}, {"b", Rational(2), -1}});
  const std::vector<std::int64_t> ns{3, 10, 103};
  const Rational ka = euler_red_identity_check(a, 1, {Rational(0)}, ns);
  const Rational kb = euler_red_identity_check(b, 1, {Rational(0)}, ns);
  const Rational kab = euler_red_identity_check(disjoint_union(a, b), 1, {Rational(0)}, ns);
  // The base term p sum rho'/2 is counted once in the union.
  CHECK(kab == ka + kb);
  CHECK(eul_sum(disjoint_union(a, b)) == eul_sum(a) + eul_sum(b));
  CHECK_THROWS_AS(disjoint_union(a, a), precondition_error);
}

TEST_CASE("bad models are rejected") {
  CHECK_THROWS_AS(HFPlusModel({{"0", Rational(0)}, {"0", Rational(2)}}, {}), precondition_error);
  CHECK_THROWS_AS(HFPlusModel({{"0", Rational(0)}}, {{"x", Rational(0), 1}}), precondition_error);
  CHECK_THROWS_AS(HFPlusModel({{"0", Rational(0)}}, {{"0", Rational(0), 2}}), precondition_error);
  CHECK_THROWS_AS(HFPlusModel({{"0", Rational(0)}}, {}, {"0"}), precondition_error);
}

TEST_CASE("bundled models pass the identity check") {
  const auto models = bundled_models();
  CHECK(models.size() >= 6);
  for (const auto& m : models) {
    CAPTURE(m.name);
    const std::int64_t n0 = m.model.stable_cutoff();
    CHECK_NOTHROW(euler_red_identity_check(m.model, m.p, m.base_rho_primes,
                                           {n0, n0 + 7, n0 + 100}));
  }
}
