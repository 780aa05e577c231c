#include "leibniz/expr.hpp"

#include <cctype>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFn parse() {
    RationalFn result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    RationalFn acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFn term() {
    RationalFn acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFn divisor = unary();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        acc /= divisor;
      } else {
        return acc;
      }
    }
  }

  RationalFn unary() {
    if (accept('-')) return -unary();
    return factor();
  }

  RationalFn factor() {
    RationalFn base = atom();
    if (accept('^')) {
      skip_ws();
      const mpz_class e = digits();
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected unsigned integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  static bool ident_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || u >= 0x80;
  }

  RationalFn atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFn(Rational(digits(), 1));
    if (ident_char(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto var = var_from_name(name);
      if (!var) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return RationalFn::var(*var);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_string(const Monomial& m, bool unicode) {
  std::string out;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned e = m.exp[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(static_cast<Var>(v), unicode);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool is_bare_monomial(const Poly& p) {
  return p.size() == 1 && p.leading().second == Rational(1) && !p.leading().first.is_one();
}

}  // namespace

RationalFn parse_expr(std::string_view text) { return Parser(text).parse(); }

Poly parse_poly(std::string_view text) {
  const RationalFn f = parse_expr(text);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial, found a rational function", 0);
  return f.as_poly();
}

std::string to_string(const Poly& p, bool unicode) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = coeff.abs();
    if (mono.is_one()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += monomial_string(mono, unicode);
    }
  }
  return out;
}

std::string to_string(const RationalFn& f, bool unicode) {
  if (f.is_polynomial()) return to_string(f.as_poly(), unicode);
  std::string num = to_string(f.num(), unicode);
  std::string den = to_string(f.den(), unicode);
  if (f.num().size() > 1) num = "(" + num + ")";
  if (!is_bare_monomial(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

RadicalRule RadicalRule::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '=' in radical rule", 0);
  const Poly lhs = parse_poly(text.substr(0, eq));
  if (lhs != Poly::var(Var::s).pow(2)) throw ParseError("radical rule must start with s^2", 0);
  const Poly rhs = parse_poly(text.substr(eq + 1));
  RadicalRule rule;
  for (const auto& [mono, coeff] : rhs.terms()) {
    if (mono.is_one()) {
      rule.c0 = coeff;
    } else if (mono == Monomial::of(Var::alpha)) {
      rule.c1 = coeff;
    } else {
      throw ParseError("radical rule right-hand side must be c0 + c1*alpha", eq + 1);
    }
  }
  return rule;
}

}  // namespace leibniz
