#include <doctest.h>

#include <random>

#include "leibniz/error.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/scalar.hpp"

using namespace leibniz;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("hand-computed values") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
    CHECK(Rational(-1, 4).str() == "-1/4");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("-3/12") == Rational(-1, 4));
    CHECK(Rational::parse(" 5 ") == Rational(5));
    CHECK(Rational(1, 3) < Rational(1, 2));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(sqrt_of_rational(Rational(-4)), DomainError);
  }

  TEST_CASE("square roots") {
    CHECK(sqrt_of_rational(Rational(9, 16)) == Rational(3, 4));
    CHECK(sqrt_of_rational(Rational(0)) == Rational(0));
    CHECK_FALSE(sqrt_of_rational(Rational(2)).has_value());
    CHECK_FALSE(sqrt_of_rational(Rational(4, 3)).has_value());
  }

  TEST_CASE("big values stay exact") {
    const Rational big = pow(Rational(10), 40) + Rational(1);
    CHECK((big - pow(Rational(10), 40)) == Rational(1));
    CHECK(Rational::parse(big.str()) == big);
  }

  TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Rational(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
      CHECK(Rational::parse(a.str()) == a);
    }
  }
}

TEST_SUITE("quadratic scalar") {
  TEST_CASE("construction and normal form") {
    const QuadScalar r5 = QuadScalar::sqrt(Rational(5));
    CHECK_FALSE(r5.is_rational());
    CHECK(r5.radicand() == Rational(5));
    CHECK(QuadScalar::sqrt(Rational(1, 4)) == QuadScalar(Rational(1, 2)));
    CHECK(QuadScalar::sqrt(Rational(0)).is_zero());
    // sqrt(5/4) = sqrt(5)/2 and sqrt(12) = 2*sqrt(3)
    CHECK(QuadScalar::sqrt(Rational(5, 4)) == QuadScalar(Rational(0), Rational(1, 2), Rational(5)));
    CHECK(QuadScalar::sqrt(Rational(12)) == QuadScalar(Rational(0), Rational(2), Rational(3)));
    CHECK_THROWS_AS(QuadScalar(Rational(1), Rational(1), Rational(4)), DomainError);
    CHECK_THROWS_AS(QuadScalar(Rational(1), Rational(1), Rational(-2)), DomainError);
  }

  TEST_CASE("arithmetic oracles") {
    const QuadScalar s = QuadScalar::sqrt(Rational(5));
    CHECK(s * s == QuadScalar(Rational(5)));
    CHECK((s * s).is_rational());
    // (1 + sqrt5)(1 - sqrt5) = -4
    CHECK((QuadScalar(1) + s) * (QuadScalar(1) - s) == QuadScalar(-4));
    // 1/(1 + sqrt5) = (sqrt5 - 1)/4
    CHECK((QuadScalar(1) + s).inverse() == QuadScalar(Rational(-1, 4), Rational(1, 4), Rational(5)));
    CHECK(s - s == QuadScalar(0));
    CHECK((s - s).radicand() == Rational(0));
    CHECK_THROWS_AS(QuadScalar(0).inverse(), DivisionByZero);
  }

  TEST_CASE("rationals mix with any field, different fields do not") {
    const QuadScalar s2 = QuadScalar::sqrt(Rational(2));
    const QuadScalar s3 = QuadScalar::sqrt(Rational(3));
    CHECK_NOTHROW(s2 + QuadScalar(Rational(1, 3)));
    CHECK_THROWS_AS(s2 + s3, ContextError);
    CHECK_THROWS_AS(s2 * s3, ContextError);
  }

  TEST_CASE("exact sign and ordering") {
    const QuadScalar s5 = QuadScalar::sqrt(Rational(5));
    CHECK(s5.sign() == 1);
    CHECK((QuadScalar(2) - s5).sign() == -1);                 // 2 < sqrt5
    CHECK((QuadScalar(Rational(9, 4)) - s5).sign() == 1);     // 9/4 > sqrt5
    CHECK((s5 - QuadScalar(Rational(2236, 1000))).sign() == 1);
    CHECK((s5 - QuadScalar(Rational(2237, 1000))).sign() == -1);
    CHECK(QuadScalar(2) < s5);
    CHECK(s5.to_double() == doctest::Approx(2.2360679));
  }

  TEST_CASE("parse and print") {
    CHECK(QuadScalar::parse("3/4") == QuadScalar(Rational(3, 4)));
    CHECK(QuadScalar::parse("sqrt(5)") == QuadScalar::sqrt(Rational(5)));
    CHECK(QuadScalar::parse("1 - 2*sqrt(5)") == QuadScalar(Rational(1), Rational(-2), Rational(5)));
    CHECK(QuadScalar::parse("-1/2 + 1/2*sqrt(7/4)") == QuadScalar(Rational(-1, 2), Rational(1, 4), Rational(7)));
    CHECK(QuadScalar(Rational(1), Rational(-2), Rational(5)).str() == "1 + -2*sqrt(5)");
    CHECK_THROWS_AS(QuadScalar::parse("2 sqrt(5)"), ParseError);
  }

  TEST_CASE("field axioms in Q(sqrt 7)") {
    std::mt19937_64 rng(11);
    auto draw = [&] { return QuadScalar(random_rational(rng)) + QuadScalar::sqrt(Rational(7)) * random_rational(rng); };
    for (int i = 0; i < 300; ++i) {
      const QuadScalar a = draw(), b = draw(), c = draw();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == QuadScalar(1));
      CHECK(QuadScalar::parse(a.str()) == a);
      CHECK((a - b).sign() == (a < b ? -1 : (a == b ? 0 : 1)));
    }
  }
}
