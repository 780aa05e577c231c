#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// The closed variable set. Declaration order is the variable order used by
/// the monomial ordering (k1 smallest, s largest).
enum class Var : std::uint8_t { k1, k2, k3, l1, l2, l3, p1, p2, p3, alpha, s };

inline constexpr std::size_t kNumVars = 11;
/// The nine operator-matrix parameters, row-major.
inline constexpr std::array<Var, 9> kMatrixVars = {Var::k1, Var::k2, Var::k3, Var::l1, Var::l2,
                                                    Var::l3, Var::p1, Var::p2, Var::p3};

std::string_view var_name(Var v, bool unicode = false);
/// Accepts the ASCII names plus the aliases ℓ1..ℓ3 and α.
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over the variable set.
struct Monomial {
  std::array<std::uint8_t, kNumVars> exp{};

  static Monomial of(Var v, unsigned power = 1);

  unsigned degree() const;
  unsigned degree_in(Var v) const { return exp[static_cast<std::size_t>(v)]; }
  bool is_one() const { return degree() == 0; }
  /// True when every exponent of `other` is <= the corresponding one here.
  bool divisible_by(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  /// Requires divisible_by(rhs).
  Monomial operator/(const Monomial& rhs) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: total degree first, then exponents compared from
  /// the largest variable (s) down to the smallest (k1).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Monomial gcd (componentwise minimum).
Monomial gcd(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q. Terms are stored in strictly
/// descending monomial order with nonzero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  static Poly var(Var v);
  static Poly term(const Monomial& m, const Rational& c);
  /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /// Constant term value when is_constant().
  Rational constant_value() const;
  /// Greatest term; requires !is_zero().
  const Term& leading() const { return terms_.front(); }
  unsigned degree() const;
  unsigned degree_in(Var v) const;
  bool uses(Var v) const { return degree_in(v) > 0; }
  /// gcd of all monomials.
  Monomial monomial_content() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;
  /// Requires every term divisible by m.
  Poly divided_by(const Monomial& m) const;
  Poly pow(unsigned exponent) const;

  /// Evaluates with values[v] for each variable the polynomial uses. Values
  /// for unused variables are ignored.
  template <typename R>
  R eval(std::span<const R, kNumVars> values) const;

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Canonical total order on polynomials: term sequences compared
  /// lexicographically (monomial, then coefficient).
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b when b divides a, nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Positive gcd of the numerators over the lcm of the denominators of the
/// coefficients, so that p / content has coprime integer coefficients.
Rational content(const Poly& p);

/// ±p / content(p) with a positive leading coefficient. Zero stays zero.
Poly normalize_sign(const Poly& p);

/// The relation s^2 = c0 + c1*alpha.
struct RadicalRule {
  Rational c0;
  Rational c1;

  Poly radicand() const { return Poly(c0) + Poly::var(Var::alpha).scaled(c1); }
  Rational radicand_at(const Rational& alpha) const { return c0 + c1 * alpha; }
  /// "s^2 = 1 - 4*alpha"
  std::string str() const;
  static RadicalRule parse(std::string_view text);

  friend bool operator==(const RadicalRule&, const RadicalRule&) = default;
};

/// Rewrites s^2 -> c0 + c1*alpha until every term has s-degree <= 1.
Poly reduce_radical(const Poly& p, const RadicalRule& rule);

template <typename R>
R Poly::eval(std::span<const R, kNumVars> values) const {
  R total(0);
  for (const auto& [mono, coeff] : terms_) {
    R t(coeff);
    for (std::size_t v = 0; v < kNumVars; ++v) {
      for (unsigned e = 0; e < mono.exp[v]; ++e) t *= values[v];
    }
    total += t;
  }
  return total;
}

}  // namespace leibniz
