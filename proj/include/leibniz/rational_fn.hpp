#pragma once

#include <array>
#include <map>
#include <optional>

#include "leibniz/poly.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// Quotient num/den of polynomials.
///
/// Normal form: den has a positive leading coefficient and coprime integer
/// coefficients, and any monomial common to num and den is cancelled. No
/// polynomial gcd is taken, so equal functions may have different
/// representations; compare with is_zero() on the difference.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const Poly& num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(long c) : RationalFn(Rational(c)) {}      // NOLINT(google-explicit-constructor)
  RationalFn(int c) : RationalFn(Rational(c)) {}       // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is the zero polynomial.
  RationalFn(const Poly& num, const Poly& den);

  static RationalFn var(Var v) { return RationalFn(Poly::var(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Numerator as a polynomial; requires is_polynomial().
  Poly as_poly() const;
  bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }

  /// Exact zero test. With a rule, the numerator is first reduced modulo
  /// s^2 - (c0 + c1*alpha); the denominator must then be free of s.
  bool is_zero() const { return num_.is_zero(); }
  bool is_zero(const RadicalRule& rule) const;

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const { return RationalFn(-num_, den_, Normalized{}); }
  RationalFn pow(unsigned exponent) const;

  /// Same representation (not mathematical equality).
  friend bool operator==(const RationalFn&, const RationalFn&) = default;

 private:
  struct Normalized {};
  RationalFn(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

/// Variable assignment; unset entries are unbound.
using Point = std::array<std::optional<Scalar>, kNumVars>;

/// Evaluates f at a point. Throws UnboundVariable for a used variable with no
/// value and DenominatorVanishes when the denominator is zero there. When a
/// rule is given and both s and alpha are bound, s^2 must equal
/// c0 + c1*alpha or RadicalInconsistent is thrown.
Scalar evaluate(const RationalFn& f, const Point& point, const RadicalRule* rule = nullptr);

/// Symbolic substitution of variables by rational functions.
RationalFn substitute(const RationalFn& f, const std::map<Var, RationalFn>& bindings);

}  // namespace leibniz
