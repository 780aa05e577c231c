#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Element a + b*sqrt(d) of Q(sqrt(d)), with sqrt(d) the positive root. The
/// radicand is stored as an integer with square factors below 1000 removed,
/// so sqrt(5/4) is kept as 1/2*sqrt(5).
///
/// A value whose irrational part is zero carries no radicand, so plain
/// rationals mix freely with any extension. Combining two irrational values
/// over different radicands throws ContextError.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QuadScalar(int a) : a_(a) {}              // NOLINT(google-explicit-constructor)
  /// Throws DomainError unless d > 0 and d is not a rational square.
  QuadScalar(const Rational& a, const Rational& b, const Rational& d);

  /// sqrt(x) as a rational when x is a square, otherwise 0 + 1*sqrt(x).
  static QuadScalar sqrt(const Rational& x);

  /// Accepts "a", "a/b", "a + b*sqrt(d)", "a - b*sqrt(d)", "b*sqrt(d)", "sqrt(d)".
  static QuadScalar parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  /// Zero for rational values.
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// Throws DomainError when the value is irrational.
  const Rational& as_rational() const;

  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadScalar inverse() const;

  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);
  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }
  QuadScalar operator-() const;

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  /// Real-embedding order; throws ContextError across radicands.
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& q) { return os << q.str(); }

 private:
  void check_context(const QuadScalar& rhs) const;
  void settle();

  Rational a_;
  Rational b_;
  Rational d_;
};

using Scalar = QuadScalar;

}  // namespace leibniz
