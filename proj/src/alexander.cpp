#include "hfeul/alexander.hpp"

#include <cctype>
#include <sstream>

#include "hfeul/errors.hpp"

namespace hfeul {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  // exponent -> coefficient, possibly asymmetric
  std::map<std::int64_t, Integer> parse_terms() {
    std::map<std::int64_t, Integer> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exponent, coeff] = parse_term();
      out[exponent] += sign * coeff;
      skip_ws();
    }
    return out;
  }

  std::vector<std::pair<std::int64_t, Integer>> parse_list() {
    std::vector<std::pair<std::int64_t, Integer>> out;
    expect('[');
    skip_ws();
    if (peek() == ']') {
      get();
      finish();
      return out;
    }
    while (true) {
      skip_ws();
      expect('(');
      skip_ws();
      const Integer i = parse_signed_integer();
      skip_ws();
      expect(',');
      skip_ws();
      const Integer a = parse_signed_integer();
      skip_ws();
      expect(')');
      out.emplace_back(to_int64(i), a);
      skip_ws();
      if (peek() == ',') {
        get();
        continue;
      }
      expect(']');
      break;
    }
    finish();
    return out;
  }

 private:
  std::pair<std::int64_t, Integer> parse_term() {
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_digits();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (peek() != 't') {
      if (!have_coeff) fail("expected a coefficient or 't'");
      return {0, coeff};
    }
    get();
    skip_ws();
    std::int64_t exponent = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      char close = 0;
      if (peek() == '(' || peek() == '{') {
        close = get() == '(' ? ')' : '}';
        skip_ws();
      }
      exponent = to_int64(parse_signed_integer());
      if (close != 0) {
        skip_ws();
        expect(close);
      }
    }
    return {exponent, coeff};
  }

  Integer parse_signed_integer() {
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
    skip_ws();
    return sign * parse_digits();
  }

  Integer parse_digits() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected digits");
    return Integer(digits, 10);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("trailing characters");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("polynomial '" + std::string(s_) + "': " + what +
                      " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymmetricLaurent SymmetricLaurent::from_coefficients(
    const std::vector<std::pair<std::int64_t, Integer>>& coefficients) {
  SymmetricLaurent out;
  std::map<std::int64_t, bool> seen;
  for (const auto& [i, a] : coefficients) {
    if (i < 0) {
      throw precondition_error("Alexander coefficient index must be >= 0, got " +
                               std::to_string(i));
    }
    if (seen[i]) {
      throw precondition_error("duplicate Alexander coefficient index " +
                               std::to_string(i));
    }
    seen[i] = true;
    if (a != 0) out.coeffs_[i] = a;
  }
  return out;
}

SymmetricLaurent SymmetricLaurent::parse(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() &&
         std::isspace(static_cast<unsigned char>(text[first]))) {
    ++first;
  }
  if (first < text.size() && text[first] == '[') {
    return from_coefficients(PolyParser(text.substr(first)).parse_list());
  }
  const auto terms = PolyParser(text).parse_terms();
  std::vector<std::pair<std::int64_t, Integer>> half;
  for (const auto& [e, a] : terms) {
    const auto mirror = terms.find(-e);
    const Integer b = mirror == terms.end() ? Integer(0) : mirror->second;
    if (a != b) {
      throw parse_error("polynomial '" + std::string(text) +
                        "' is not symmetric in t <-> t^-1 (exponent " +
                        std::to_string(e) + ")");
    }
    if (e >= 0) half.emplace_back(e, a);
  }
  return from_coefficients(half);
}

SymmetricLaurent SymmetricLaurent::unknot() {
  return from_coefficients({{0, 1}});
}

SymmetricLaurent SymmetricLaurent::trefoil() {
  return from_coefficients({{0, -1}, {1, 1}});
}

SymmetricLaurent SymmetricLaurent::figure_eight() {
  return from_coefficients({{0, 3}, {1, -1}});
}

Integer SymmetricLaurent::coefficient(std::int64_t i) const {
  if (i < 0) i = -i;
  const auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::int64_t SymmetricLaurent::degree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

std::string SymmetricLaurent::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [i, a] : coeffs_) {
    if (!first) os << ',';
    first = false;
    os << '(' << i << ',' << a.get_str() << ')';
  }
  os << ']';
  return os.str();
}

std::string SymmetricLaurent::pretty() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<std::int64_t, Integer>> terms;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    terms.emplace_back(it->first, it->second);
  }
  for (const auto& [i, a] : coeffs_) {
    if (i > 0) terms.emplace_back(-i, a);
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, a] : terms) {
    const Integer mag = ::abs(a);
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag.get_str();
    if (e == 1) os << 't';
    if (e != 0 && e != 1) os << "t^" << e;
  }
  return os.str();
}

Integer evaluate_at_one(const SymmetricLaurent& a) {
  Integer total = 0;
  for (const auto& [i, c] : a.coefficients()) total += i == 0 ? c : 2 * c;
  return total;
}

Integer second_moment(const SymmetricLaurent& a) {
  Integer total = 0;
  for (const auto& [i, c] : a.coefficients()) {
    const Integer ii(static_cast<long>(i));
    total += c * ii * ii;
  }
  return total;
}

bool check_normalization(const SymmetricLaurent& a,
                         const Integer& torsion_order) {
  return evaluate_at_one(a) == torsion_order;
}

}  // namespace hfeul
