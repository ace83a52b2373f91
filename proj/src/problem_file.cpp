#include "hfeul/problem_file.hpp"

#include <fstream>
#include <sstream>

#include "hfeul/errors.hpp"
#include "json.hpp"

namespace hfeul {

namespace {

using nlohmann::json;

std::string join(const std::vector<ValidationError>& errors) {
  std::string msg;
  for (const auto& e : errors) {
    if (!msg.empty()) msg += "; ";
    msg += e.field + ": " + e.reason;
  }
  return msg;
}

// Collects field errors instead of stopping at the first one.
class Reader {
 public:
  std::vector<ValidationError> errors;

  void error(const std::string& field, const std::string& reason) {
    errors.push_back({field, reason});
  }

  std::optional<Rational> rational(const json& obj, const std::string& key,
                                   const std::string& field,
                                   std::optional<Rational> fallback = {}) {
    if (!obj.contains(key)) {
      if (!fallback) error(field, "missing");
      return fallback;
    }
    return rational_value(obj.at(key), field);
  }

  std::optional<Rational> rational_value(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
      try {
        return Rational::parse(v.get<std::string>());
      } catch (const parse_error& e) {
        error(field, e.what());
        return std::nullopt;
      }
    }
    error(field, "expected a \"num/den\" string or an integer");
    return std::nullopt;
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& key,
                                      const std::string& field,
                                      std::optional<std::int64_t> fallback = {}) {
    if (!obj.contains(key)) {
      if (!fallback) error(field, "missing");
      return fallback;
    }
    const json& v = obj.at(key);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
      try {
        const Rational r = Rational::parse(v.get<std::string>());
        if (r.is_integer()) return to_int64(r.numerator());
      } catch (const std::exception&) {
      }
    }
    error(field, "expected an integer");
    return std::nullopt;
  }

  std::optional<SymmetricLaurent> polynomial(const json& v, const std::string& field) {
    try {
      if (v.is_string()) return SymmetricLaurent::parse(v.get<std::string>());
      if (v.is_array()) {
        std::vector<std::pair<std::int64_t, Integer>> coeffs;
        for (const auto& entry : v) {
          if (!entry.is_array() || entry.size() != 2 ||
              !entry[0].is_number_integer()) {
            error(field, "expected [index, coefficient] pairs");
            return std::nullopt;
          }
          const auto a = rational_value(entry[1], field);
          if (!a) return std::nullopt;
          if (!a->is_integer()) {
            error(field, "Alexander coefficients must be integers");
            return std::nullopt;
          }
          coeffs.emplace_back(entry[0].get<std::int64_t>(), a->numerator());
        }
        return SymmetricLaurent::from_coefficients(coeffs);
      }
      error(field, "expected a polynomial string or a coefficient list");
    } catch (const std::exception& e) {
      error(field, e.what());
    }
    return std::nullopt;
  }
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error("<document>", e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("<file>", "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::optional<SurgeryProblem> read_surgery(Reader& rd, const json& s) {
  if (!s.is_object()) {
    rd.error("surgery", "expected an object");
    return std::nullopt;
  }
  const std::size_t before = rd.errors.size();
  SurgeryProblem prob;
  const auto p = rd.integer(s, "p", "surgery.p");
  const auto q = rd.integer(s, "q", "surgery.q");
  const auto d = rd.integer(s, "d", "surgery.d", 1);
  const auto tors = rd.integer(s, "tors", "surgery.tors", 1);
  std::optional<SymmetricLaurent> alex = SymmetricLaurent::unknot();
  if (s.contains("alex")) alex = rd.polynomial(s.at("alex"), "surgery.alex");
  const auto base_eul = rd.rational(s, "base_eul", "surgery.base_eul", Rational(0));
  const auto base_lambda =
      rd.rational(s, "base_lambda", "surgery.base_lambda", Rational(0));
  if (rd.errors.size() != before) return std::nullopt;

  prob.p = *p;
  prob.q = *q;
  prob.d = *d;
  prob.tors_order = *tors;
  prob.alex = *alex;
  prob.base_eul_sum = *base_eul;
  prob.base_lambda_prime = *base_lambda;
  for (const auto& e : validate(prob)) rd.error("surgery." + e.field, e.reason);
  if (rd.errors.size() != before) return std::nullopt;
  return prob;
}

std::optional<ModelSpec> read_model(Reader& rd, const json& m, const std::string& where) {
  if (!m.is_object()) {
    rd.error(where, "expected an object");
    return std::nullopt;
  }
  const std::size_t before = rd.errors.size();
  auto label_of = [&](const json& entry, const std::string& field) -> std::string {
    if (!entry.contains("label")) {
      rd.error(field, "missing label");
      return {};
    }
    const json& l = entry.at("label");
    if (l.is_string()) return l.get<std::string>();
    if (l.is_number_integer()) return std::to_string(l.get<std::int64_t>());
    rd.error(field, "label must be a string or an integer");
    return {};
  };

  std::vector<TowerSummand> towers;
  if (m.contains("towers")) {
    std::size_t i = 0;
    for (const auto& t : m.at("towers")) {
      const std::string field = where + ".towers[" + std::to_string(i++) + "]";
      const std::string label = label_of(t, field);
      const auto bottom = rd.rational(t, "bottom", field + ".bottom");
      if (bottom) towers.push_back({label, *bottom});
    }
  }
  std::vector<ReducedGenerator> reduced;
  if (m.contains("reduced")) {
    std::size_t i = 0;
    for (const auto& g : m.at("reduced")) {
      const std::string field = where + ".reduced[" + std::to_string(i++) + "]";
      const std::string label = label_of(g, field);
      const auto degree = rd.rational(g, "degree", field + ".degree");
      const auto sign = rd.integer(g, "sign", field + ".sign", 1);
      if (sign && *sign != 1 && *sign != -1) rd.error(field + ".sign", "must be +1 or -1");
      if (degree && sign) reduced.push_back({label, *degree, static_cast<int>(*sign)});
    }
  }
  std::vector<SpincId> towerless;
  if (m.contains("towerless")) {
    for (const auto& l : m.at("towerless")) {
      if (l.is_string()) {
        towerless.push_back(l.get<std::string>());
      } else if (l.is_number_integer()) {
        towerless.push_back(std::to_string(l.get<std::int64_t>()));
      } else {
        rd.error(where + ".towerless", "labels must be strings or integers");
      }
    }
  }

  ModelSpec spec;
  if (const auto p = rd.integer(m, "p", where + ".p", 1)) spec.p = *p;
  if (m.contains("base_rho_prime")) {
    spec.base_rho_primes.clear();
    std::size_t i = 0;
    for (const auto& v : m.at("base_rho_prime")) {
      const std::string field = where + ".base_rho_prime[" + std::to_string(i++) + "]";
      if (const auto r = rd.rational_value(v, field)) {
        if (*r < Rational(0) || *r >= Rational(2)) {
          rd.error(field, "rho' must lie in [0, 2)");
        }
        spec.base_rho_primes.push_back(*r);
      }
    }
  }
  if (m.contains("N")) {
    for (const auto& v : m.at("N")) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        rd.error(where + ".N", "entries must be non-negative integers");
        continue;
      }
      spec.n_values.push_back(v.get<std::int64_t>());
    }
  }
  if (rd.errors.size() != before) return std::nullopt;
  try {
    spec.model = HFPlusModel(std::move(towers), std::move(reduced), std::move(towerless));
  } catch (const precondition_error& e) {
    rd.error(where, e.what());
    return std::nullopt;
  }
  return spec;
}

std::optional<SweepSpec> read_sweep(Reader& rd, const json& s) {
  if (!s.is_object()) {
    rd.error("sweep", "expected an object");
    return std::nullopt;
  }
  SweepSpec sweep;
  if (const auto pmax = rd.integer(s, "pmax", "sweep.pmax", 50)) {
    if (*pmax < 2) rd.error("sweep.pmax", "must be >= 2");
    sweep.pmax = *pmax;
  }
  if (s.contains("suites")) {
    sweep.suites.clear();
    for (const auto& v : s.at("suites")) {
      if (!v.is_string()) {
        rd.error("sweep.suites", "suite names must be strings");
        continue;
      }
      sweep.suites.push_back(v.get<std::string>());
    }
  }
  return sweep;
}

}  // namespace

validation_error::validation_error(std::vector<ValidationError> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

validation_error::validation_error(std::string field, std::string reason)
    : validation_error(std::vector<ValidationError>{{std::move(field), std::move(reason)}}) {}

ProblemFile parse_problem_text(std::string_view text) {
  const json doc = parse_json(text);
  Reader rd;
  if (!doc.is_object()) throw validation_error("<document>", "expected an object");
  ProblemFile out;
  if (!doc.contains("surgery")) {
    rd.error("surgery", "missing");
  } else if (auto prob = read_surgery(rd, doc.at("surgery"))) {
    out.surgery = *prob;
  }
  if (doc.contains("hfmodel")) out.hfmodel = read_model(rd, doc.at("hfmodel"), "hfmodel");
  if (doc.contains("sweep")) out.sweep = read_sweep(rd, doc.at("sweep"));
  if (!rd.errors.empty()) throw validation_error(rd.errors);
  return out;
}

ProblemFile parse_problem_file(const std::filesystem::path& path) {
  return parse_problem_text(slurp(path));
}

ModelSpec parse_model_text(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw validation_error("<document>", "expected an object");
  Reader rd;
  const bool nested = doc.contains("hfmodel");
  auto spec = read_model(rd, nested ? doc.at("hfmodel") : doc,
                         nested ? "hfmodel" : "model");
  if (!rd.errors.empty() || !spec) throw validation_error(rd.errors);
  return *spec;
}

ModelSpec parse_model_file(const std::filesystem::path& path) {
  return parse_model_text(slurp(path));
}

}  // namespace hfeul
