#include "hfeul/rational.hpp"

#include <cctype>
#include <ostream>

#include "hfeul/errors.hpp"

namespace hfeul {

namespace {

Integer integer_from(std::int64_t n) {
  // mpz_class has no int64 constructor on every platform.
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return z;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw parse_error("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(integer_from(n)) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(integer_from(num), integer_from(den)) {}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    const Integer num = parse_integer(trim(s.substr(0, slash)));
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
      throw parse_error("signed denominator");
    }
    const Integer den = parse_integer(den_text);
    if (den == 0) throw parse_error("zero denominator");
    return Rational(num, den);
  } catch (const parse_error&) {
    throw parse_error("malformed rational '" + std::string(text) + "'");
  }
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw precondition_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(),
             x.raw().get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(),
             x.raw().get_den_mpz_t());
  return out;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::int64_t to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw precondition_error("integer out of range");
  return n.get_si();
}

}  // namespace hfeul
