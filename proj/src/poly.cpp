#include "leibniz/poly.hpp"

#include <algorithm>
#include <map>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

constexpr std::array<std::string_view, kNumVars> kAsciiNames = {
    "k1", "k2", "k3", "l1", "l2", "l3", "p1", "p2", "p3", "alpha", "s"};
constexpr std::array<std::string_view, kNumVars> kUnicodeNames = {
    "k1", "k2", "k3", "ℓ1", "ℓ2", "ℓ3", "p1", "p2", "p3", "α", "s"};

}  // namespace

std::string_view var_name(Var v, bool unicode) {
  const auto i = static_cast<std::size_t>(v);
  return unicode ? kUnicodeNames[i] : kAsciiNames[i];
}

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (name == kAsciiNames[i] || name == kUnicodeNames[i]) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Monomial Monomial::of(Var v, unsigned power) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp[i] < other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const unsigned e = exp[i] + rhs.exp[i];
    if (e > 255) throw DomainError("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] - rhs.exp[i]);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = kNumVars; i-- > 0;) {
    if (auto c = a.exp[i] <=> b.exp[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.exp[i] = std::min(a.exp[i], b.exp[i]);
  return m;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::var(Var v) { return term(Monomial::of(v), Rational(1)); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in(v));
  return d;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_[0].first;
  for (const auto& t : terms_) g = gcd(g, t.first);
  return g;
}

namespace {

// Merge of two descending term lists; sign applies to rhs.
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool negate) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, negate ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational c = negate ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& rhs) {
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Poly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  }
  return Poly::from_terms(std::move(terms));
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Poly Poly::times(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

Poly Poly::divided_by(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) {
    if (!t.first.divisible_by(m)) throw DomainError("monomial does not divide polynomial");
    t.first = t.first / m;
  }
  return p;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  Poly remainder = a;
  std::vector<Poly::Term> quotient;
  const auto& [lead_m, lead_c] = b.leading();
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading();
    if (!rm.divisible_by(lead_m)) return std::nullopt;
    Poly q = Poly::term(rm / lead_m, rc / lead_c);
    quotient.push_back(q.leading());
    remainder -= q * b;
  }
  return Poly::from_terms(std::move(quotient));
}

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : p.terms()) {
    const mpz_class n = t.second.numerator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    den_lcm = lcm(den_lcm, t.second.denominator());
  }
  return Rational(num_gcd, den_lcm);
}

Poly normalize_sign(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading().second.sign() < 0) c = -c;
  return p.scaled(c.inverse());
}

Poly reduce_radical(const Poly& p, const RadicalRule& rule) {
  const auto s_index = static_cast<std::size_t>(Var::s);
  if (p.degree_in(Var::s) <= 1) return p;
  const Poly radicand = rule.radicand();
  // Powers of the radicand, indexed by s-exponent / 2.
  std::vector<Poly> radicand_powers{Poly(1)};
  std::vector<Poly::Term> out;
  Poly acc;
  for (const auto& [mono, coeff] : p.terms()) {
    const unsigned e = mono.exp[s_index];
    if (e <= 1) {
      acc += Poly::term(mono, coeff);
      continue;
    }
    const unsigned half = e / 2;
    while (radicand_powers.size() <= half) radicand_powers.push_back(radicand_powers.back() * radicand);
    Monomial rest = mono;
    rest.exp[s_index] = static_cast<std::uint8_t>(e % 2);
    acc += radicand_powers[half].times(rest).scaled(coeff);
  }
  return acc;
}

std::string RadicalRule::str() const {
  std::string out = "s^2 = " + c0.str();
  if (!c1.is_zero()) {
    out += c1.sign() < 0 ? " - " : " + ";
    const Rational mag = c1.abs();
    if (mag != Rational(1)) out += mag.str() + "*";
    out += "alpha";
  }
  return out;
}

}  // namespace leibniz
