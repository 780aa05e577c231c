#include "leibniz/rational_fn.hpp"

#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

RationalFn::RationalFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Monomial common = gcd(num_.monomial_content(), den_.monomial_content());
  if (!common.is_one()) {
    num_ = num_.divided_by(common);
    den_ = den_.divided_by(common);
  }
  Rational scale = content(den_);
  if (den_.leading().second.sign() < 0) scale = -scale;
  if (scale != Rational(1)) {
    const Rational inv = scale.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Poly RationalFn::as_poly() const {
  if (!is_polynomial()) throw DomainError("rational function is not a polynomial");
  return num_.scaled(den_.constant_value().inverse());
}

bool RationalFn::is_zero(const RadicalRule& rule) const {
  if (den_.uses(Var::s)) throw DomainError("radical symbol in a denominator");
  return reduce_radical(num_, rule).is_zero();
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) { return *this += -rhs; }

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.num_.is_zero()) throw DivisionByZero();
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

RationalFn RationalFn::pow(unsigned exponent) const {
  return RationalFn(num_.pow(exponent), den_.pow(exponent), Normalized{});
}

Scalar evaluate(const RationalFn& f, const Point& point, const RadicalRule* rule) {
  std::array<Scalar, kNumVars> values{};
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const Var var = static_cast<Var>(v);
    if (point[v]) {
      values[v] = *point[v];
    } else if (f.uses(var)) {
      throw UnboundVariable(std::string(var_name(var)));
    }
  }
  if (rule != nullptr && point[static_cast<std::size_t>(Var::s)] &&
      point[static_cast<std::size_t>(Var::alpha)]) {
    const Scalar& s = *point[static_cast<std::size_t>(Var::s)];
    const Scalar& alpha = *point[static_cast<std::size_t>(Var::alpha)];
    if (s * s != Scalar(rule->c0) + Scalar(rule->c1) * alpha) {
      throw RadicalInconsistent("s = " + s.str() + " does not satisfy " + rule->str() +
                                " at alpha = " + alpha.str());
    }
  }
  const std::span<const Scalar, kNumVars> view(values);
  const Scalar den = f.den().eval<Scalar>(view);
  if (den.is_zero()) throw DenominatorVanishes("denominator vanishes at the given point");
  return f.num().eval<Scalar>(view) / den;
}

RationalFn substitute(const RationalFn& f, const std::map<Var, RationalFn>& bindings) {
  std::array<RationalFn, kNumVars> values;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const Var var = static_cast<Var>(v);
    auto it = bindings.find(var);
    values[v] = it != bindings.end() ? it->second : RationalFn::var(var);
  }
  const std::span<const RationalFn, kNumVars> view(values);
  const RationalFn den = f.den().eval<RationalFn>(view);
  if (den.is_zero()) throw DenominatorVanishes("denominator vanishes under substitution");
  return f.num().eval<RationalFn>(view) / den;
}

}  // namespace leibniz
