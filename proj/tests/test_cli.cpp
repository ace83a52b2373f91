#include "doctest.h"

#include <sstream>

#include "hfeul/cli.hpp"
#include "hfeul/problem_file.hpp"
#include "hfeul/report.hpp"

using namespace hfeul;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const std::string kData = HFEUL_DATA_DIR;

}  // namespace

TEST_CASE("problem files") {
  const auto trefoil = parse_problem_file(kData + "/problems/trefoil_minus1.json");
  CHECK(trefoil.surgery.p == 1);
  CHECK(trefoil.surgery.q == -1);
  CHECK(trefoil.surgery.alex == SymmetricLaurent::trefoil());
  CHECK_FALSE(trefoil.hfmodel.has_value());

  const auto fig8 = parse_problem_file(kData + "/problems/figure8_plus1.json");
  CHECK(fig8.surgery.alex == SymmetricLaurent::figure_eight());

  const auto rp3 = parse_problem_file(kData + "/problems/unknot_rp3.json");
  REQUIRE(rp3.sweep.has_value());
  CHECK(rp3.sweep->pmax == 20);
  CHECK(rp3.sweep->suites.size() == 2);
}

TEST_CASE("problem file errors name the field") {
  try {
    parse_problem_text(R"({"surgery": {"p": 2, "q": 4}})");
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    REQUIRE(e.errors().size() == 1);
    CHECK(e.errors()[0].field == "surgery.q");
    CHECK(e.errors()[0].reason == "gcd(p,q) ≠ 1");
  }
  CHECK_THROWS_AS(parse_problem_text(R"({"surgery": {"q": 1}})"), validation_error);
  CHECK_THROWS_AS(parse_problem_text(R"({"surgery": {"p": 1, "q": 0, "alex": "t + 1"}})"),
                  validation_error);
  CHECK_THROWS_AS(parse_problem_text(R"({"hfmodel": {}})"), validation_error);
  CHECK_THROWS_AS(parse_problem_text("{not json"), validation_error);
  CHECK_THROWS_AS(parse_problem_file(kData + "/problems/missing.json"), validation_error);
}

TEST_CASE("model files") {
  const auto rp3 = parse_model_file(kData + "/models/rp3.json");
  CHECK(rp3.p == 2);
  CHECK(rp3.model.towers().size() == 2);
  CHECK(rp3.n_values == std::vector<std::int64_t>{5, 9, 23});
  const auto b1 = parse_model_file(kData + "/models/b1_one.json");
  CHECK(b1.model.towerless() == std::vector<SpincId>{"s"});
  CHECK(b1.base_rho_primes.size() == 2);
  CHECK_THROWS_AS(parse_model_text(R"({"towers": [{"label": "0", "bottom": "x"}]})"),
                  validation_error);
  CHECK_THROWS_AS(parse_model_text(R"({"base_rho_prime": ["5/2"]})"), validation_error);
}

TEST_CASE("dedekind subcommand") {
  const auto r = run({"dedekind", "1", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1/18"));
  CHECK(run({"dedekind", "2", "4"}).code == 2);
}

TEST_CASE("lens subcommand") {
  const auto r = run({"--format", "json", "lens", "2", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"lambda\": \"0/1\""));
  CHECK(contains(r.out, "\"ok\": true"));
  const auto per = run({"lens", "3", "1", "--orientation", "-1", "--per-spinc"});
  CHECK(per.code == 0);
  CHECK(contains(per.out, "-1/36"));
  CHECK(run({"lens", "4", "2"}).code == 2);
}

TEST_CASE("surgery subcommand") {
  const auto poincare = run({"--format", "json", "surgery", "--p", "1", "--q", "-1",
                             "--alex", "t - 1 + t^-1"});
  CHECK(poincare.code == 0);
  CHECK(contains(poincare.out, "\"lambda\": \"-1/1\""));

  const auto file = run({"surgery", "--problem", kData + "/problems/figure8_plus1.json"});
  CHECK(file.code == 0);
  CHECK(contains(file.out, "lambda_prime   -1/1"));

  const auto bad = run({"surgery", "--p", "2", "--q", "4"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "gcd(p,q) ≠ 1"));
}

TEST_CASE("hfmodel subcommand") {
  for (const char* name : {"poincare", "sigma237", "rp3", "b1_one"}) {
    CAPTURE(name);
    CHECK(run({"hfmodel", "check", kData + "/models/" + name + ".json"}).code == 0);
  }
  const auto rp3 = run({"hfmodel", "check", kData + "/models/rp3.json", "--N", "5,9"});
  CHECK(contains(rp3.out, "k[9]"));
  CHECK(run({"hfmodel", "check", kData + "/models/missing.json"}).code == 2);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--suite", "reciprocity", "--pmax", "30"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total failures: 0"));
  const auto j = run({"--format", "json", "verify", "--suite", "lens-sum", "--pmax", "10"});
  CHECK(contains(j.out, "\"failure_count\": 0"));
  const auto f = run({"verify", "--problem", kData + "/problems/unknot_rp3.json"});
  CHECK(f.code == 0);
  CHECK(contains(f.out, "surgery-cross"));
  CHECK_FALSE(contains(f.out, "torsion-multiset"));
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  const auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "unknown subcommand 'frobnicate'"));
  CHECK(run({}).code == 2);
  CHECK(run({"--format", "xml", "dedekind", "1", "3"}).code == 2);
}

TEST_CASE("JSON output is byte stable") {
  const std::vector<std::string> args{"--format", "json", "lens", "7", "3", "--per-spinc"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("report emission") {
  InvariantReport empty;
  empty.command = "nothing";
  CHECK(emit_report(empty, Format::text) == "# nothing\n");

  InvariantReport r;
  r.command = "demo";
  r.add_value("x", Rational(1, 2));
  r.add_check("x_is_half", Rational(0), {"x"});
  r.add_check("broken", Rational(1), {"x"});
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.values.size() == 1);
  CHECK(r.values[0].identities == std::vector<std::string>{"x_is_half"});
  const std::string json = emit_report(r, Format::json);
  CHECK(contains(json, "\"x\": \"1/2\""));
  CHECK(contains(json, "\"ok\": false"));
}
