#include "leibniz/rational.hpp"

#include <cctype>

#include "leibniz/error.hpp"

namespace leibniz {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&](bool allow_sign) {
    skip_ws();
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected digits in rational literal", pos);
    std::string s(text.substr(start, pos - start));
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  };
  const mpz_class num = read_digits(true);
  mpz_class den = 1;
  skip_ws();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits(false);
    if (den == 0) throw ParseError("zero denominator in rational literal", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters in rational literal", pos);
  return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::optional<Rational> sqrt_of_rational(const Rational& x) {
  if (x.sign() < 0) throw DomainError("square root of negative rational " + x.str());
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace leibniz
