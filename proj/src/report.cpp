#include "hfeul/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hfeul {

void InvariantReport::echo(std::string key, std::string value) {
  input.emplace_back(std::move(key), std::move(value));
}

void InvariantReport::add_value(std::string name, Rational value,
                                std::vector<std::string> identities) {
  values.push_back({std::move(name), std::move(value), std::move(identities)});
}

void InvariantReport::add_check(std::string name, Rational residual,
                                const std::vector<std::string>& involves) {
  const bool ok = residual.is_zero();
  if (ok) {
    for (auto& v : values) {
      if (std::find(involves.begin(), involves.end(), v.name) != involves.end()) {
        v.identities.push_back(name);
      }
    }
  }
  checks.push_back({std::move(name), std::move(residual)});
}

bool InvariantReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass(); });
}

namespace {

std::string emit_json(const InvariantReport& r) {
  nlohmann::json out = nlohmann::json::object();
  out["command"] = r.command;
  nlohmann::json input = nlohmann::json::object();
  for (const auto& [k, v] : r.input) input[k] = v;
  out["input"] = input;
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json identities = nlohmann::json::object();
  for (const auto& v : r.values) {
    values[v.name] = v.value.str();
    identities[v.name] = v.identities;
  }
  out["values"] = values;
  out["identities"] = identities;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"residual", c.residual.str()}, {"pass", c.pass()}});
  }
  out["checks"] = checks;
  out["ok"] = r.all_pass();
  return out.dump(2) + "\n";
}

void table(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    std::string line = "  ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
}

std::string emit_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "# " << (r.command.empty() ? "report" : r.command) << '\n';
  if (!r.input.empty()) {
    os << "input\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : r.input) rows.push_back({k, v});
    table(os, rows);
  }
  if (!r.values.empty()) {
    os << "values\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : r.values) {
      std::string ids;
      for (const auto& id : v.identities) ids += (ids.empty() ? "" : ", ") + id;
      rows.push_back({v.name, v.value.str(), ids.empty() ? "" : "[" + ids + "]"});
    }
    table(os, rows);
  }
  if (!r.checks.empty()) {
    os << "checks\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.checks) {
      rows.push_back({c.name, c.residual.str(), c.pass() ? "pass" : "FAIL"});
    }
    table(os, rows);
  }
  return os.str();
}

}  // namespace

std::string emit_report(const InvariantReport& report, Format format) {
  return format == Format::json ? emit_json(report) : emit_text(report);
}

}  // namespace hfeul
