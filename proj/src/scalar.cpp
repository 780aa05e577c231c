#include "leibniz/scalar.hpp"

#include <cctype>
#include <cmath>

#include "leibniz/error.hpp"

namespace leibniz {

QuadScalar::QuadScalar(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (d.sign() <= 0) throw DomainError("radicand must be positive, got " + d.str());
  if (sqrt_of_rational(d)) throw DomainError("radicand " + d.str() + " is a rational square");
  // sqrt(p/q) = sqrt(p*q)/q; small square factors of p*q move into b so that
  // equal fields share one radicand.
  mpz_class n = d.numerator() * d.denominator();
  Rational scale(mpz_class(1), d.denominator());
  for (unsigned long f = 2; f <= 1000 && f * f <= n; ++f) {
    const mpz_class sq = f * f;
    while (mpz_divisible_p(n.get_mpz_t(), sq.get_mpz_t()) != 0) {
      n /= sq;
      scale *= Rational(static_cast<long>(f));
    }
  }
  b_ *= scale;
  d_ = Rational(n, 1);
  settle();
}

QuadScalar QuadScalar::sqrt(const Rational& x) {
  if (auto r = sqrt_of_rational(x)) return QuadScalar(*r);
  return QuadScalar(Rational(0), Rational(1), x);
}

void QuadScalar::settle() {
  if (b_.is_zero()) d_ = Rational(0);
}

void QuadScalar::check_context(const QuadScalar& rhs) const {
  if (!b_.is_zero() && !rhs.b_.is_zero() && d_ != rhs.d_) {
    throw ContextError("mixed radicands sqrt(" + d_.str() + ") and sqrt(" + rhs.d_.str() + ")");
  }
}

const Rational& QuadScalar::as_rational() const {
  if (!is_rational()) throw DomainError("value " + str() + " is irrational");
  return a_;
}

int QuadScalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2*d wins. Equality would make d a square.
  return a_ * a_ > b_ * b_ * d_ ? sa : sb;
}

double QuadScalar::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

std::string QuadScalar::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + d_.str() + ")";
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (b_.is_zero()) return QuadScalar(a_.inverse());
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  QuadScalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  r.settle();
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  check_context(rhs);
  if (d_.is_zero()) d_ = rhs.d_;
  a_ += rhs.a_;
  b_ += rhs.b_;
  settle();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  check_context(rhs);
  if (d_.is_zero()) d_ = rhs.d_;
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  settle();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  check_context(rhs);
  if (rhs.b_.is_zero()) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
  } else if (b_.is_zero()) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
    d_ = rhs.d_;
  } else {
    const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d_;
    b_ = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
  }
  settle();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
  check_context(rhs);
  return *this *= rhs.inverse();
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// "b*sqrt(d)" or "sqrt(d)" with an optional sign; returns b*sqrt(d).
QuadScalar parse_radical_term(const std::string& s, std::size_t offset) {
  const auto at = s.find("sqrt(");
  if (at == std::string::npos || s.back() != ')') throw ParseError("malformed radical term", offset);
  Rational coeff(1);
  std::string head = s.substr(0, at);
  if (!head.empty()) {
    if (head == "-" || head == "+") {
      coeff = Rational(head == "-" ? -1 : 1);
    } else {
      if (head.back() != '*') throw ParseError("expected '*' before sqrt", offset + at);
      head.pop_back();
      coeff = Rational::parse(head);
    }
  }
  const Rational d = Rational::parse(s.substr(at + 5, s.size() - at - 6));
  return coeff * QuadScalar::sqrt(d);
}

}  // namespace

QuadScalar QuadScalar::parse(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty scalar", 0);
  if (s.find("sqrt") == std::string::npos) return QuadScalar(Rational::parse(s));
  // Split at the last top-level '+'/'-' that is not a leading sign or part of "+-".
  std::size_t split = std::string::npos;
  int depth = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] != '+' && s[i - 1] != '-' &&
        s[i - 1] != '/' && s[i - 1] != '*') {
      split = i;
    }
  }
  if (split == std::string::npos) return parse_radical_term(s, 0);
  const Rational a = Rational::parse(s.substr(0, split));
  std::string rest = s.substr(split + 1);
  QuadScalar r = parse_radical_term(rest, split + 1);
  if (s[split] == '-') r = -r;
  return QuadScalar(a) + r;
}

}  // namespace leibniz
