#include <doctest.h>

#include <algorithm>
#include <random>
#include <span>

#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"
#include "leibniz/nijenhuis.hpp"

using namespace leibniz;

namespace {

OperatorMatrix matrix(std::initializer_list<long> entries) {
  OperatorMatrix n;
  auto it = entries.begin();
  for (auto& row : n) {
    for (auto& x : row) x = Scalar(*it++);
  }
  return n;
}

std::optional<Rational> sample_alpha(const Algebra& alg) {
  return alg.parametric() ? std::optional(Rational(3, 16)) : std::nullopt;
}

ConstraintSystem parse_system(const std::string& alg, std::initializer_list<const char*> polys) {
  std::vector<Poly> out;
  for (const char* p : polys) out.push_back(parse_poly(p));
  return ConstraintSystem::canonical(alg, std::nullopt, std::move(out));
}

}  // namespace

TEST_CASE("hand-computed residual") {
  // A5 with N(f) = g and N(e) = N(g) = 0: at (f, f) the bracket [g, g] = e survives
  // and every other term vanishes.
  const Algebra& a5 = algebra_by_id("A5");
  const OperatorMatrix n = matrix({0, 0, 0, 0, 0, 1, 0, 0, 0});
  const auto r = residual(a5, n, {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)});
  CHECK(r[0] == Scalar(1));
  CHECK(r[1] == Scalar(0));
  CHECK(r[2] == Scalar(0));
  const auto bad = nijenhuis_check(a5, n);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == BasisPair{1, 1});
}

TEST_CASE("scalar multiples of the identity are Nijenhuis everywhere") {
  for (const auto& alg : catalog()) {
    for (long c : {0L, 1L, -3L}) {
      CHECK_MESSAGE(nijenhuis_check(alg, matrix({c, 0, 0, 0, c, 0, 0, 0, c}), sample_alpha(alg)).empty(), alg.id);
    }
  }
}

TEST_CASE("the residual is bilinear in x and y") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-3, 3);
  for (const auto& alg : catalog()) {
    const auto alpha = sample_alpha(alg);
    OperatorMatrix n;
    for (auto& row : n) {
      for (auto& x : row) x = Scalar(d(rng));
    }
    const Vec3<Scalar> x{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
    const Vec3<Scalar> y{Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))};
    Vec3<Scalar> expected{Scalar(0), Scalar(0), Scalar(0)};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Vec3<Scalar> ei{Scalar(0), Scalar(0), Scalar(0)}, ej = ei;
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        const auto r = residual(alg, n, ei, ej, alpha);
        for (std::size_t k = 0; k < 3; ++k) expected[k] += x[i] * y[j] * r[k];
      }
    }
    CHECK_MESSAGE(residual(alg, n, x, y, alpha) == expected, alg.id);
  }
}

TEST_CASE("the integer fast path agrees with exact arithmetic") {
  std::mt19937_64 rng(77);
  const std::vector<Rational> entries = {Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1),
                                         Rational(3)};
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(entries.size() - 1));
  std::uniform_int_distribution<int> zero(0, 2);
  for (const auto& alg : catalog()) {
    const auto alpha = sample_alpha(alg);
    const FastNijenhuisChecker fast(alg, alpha, entries);
    const NijenhuisChecker exact(alg, alpha);
    int positives = 0;
    for (int s = 0; s < 400; ++s) {
      std::array<std::uint32_t, 9> idx{};
      // bias towards zeros so that Nijenhuis operators actually show up
      for (auto& i : idx) i = zero(rng) == 0 ? pick(rng) : 2;
      const bool expected = exact.is_nijenhuis(fast.matrix(idx));
      positives += expected ? 1 : 0;
      CHECK(fast.is_nijenhuis(idx) == expected);
    }
    CHECK_MESSAGE(positives > 0, alg.id);
  }
}

TEST_CASE("generated constraints") {
  SUBCASE("canonical form") {
    const auto sys = gen_constraints(algebra_by_id("A5"));
    CHECK_FALSE(sys.polys.empty());
    CHECK(std::is_sorted(sys.polys.begin(), sys.polys.end()));
    for (const auto& p : sys.polys) CHECK(p == normalize_sign(p));
  }
  SUBCASE("the generic operator is Nijenhuis iff every polynomial vanishes") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-1, 1);
    for (const auto& alg : catalog()) {
      const auto alpha = sample_alpha(alg);
      const auto sys = gen_constraints(alg, alpha);
      for (int s = 0; s < 200; ++s) {
        std::array<Scalar, kNumVars> pt{};
        OperatorMatrix n;
        for (std::size_t i = 0; i < 9; ++i) {
          const Scalar v(d(rng));
          n[i / 3][i % 3] = v;
          pt[static_cast<std::size_t>(kMatrixVars[i])] = v;
        }
        const std::span<const Scalar, kNumVars> values(pt);
        const bool all_zero = std::all_of(sys.polys.begin(), sys.polys.end(),
                                          [&](const Poly& p) { return p.eval<Scalar>(values).is_zero(); });
        CHECK(all_zero == nijenhuis_check(alg, n, alpha).empty());
      }
    }
  }
  SUBCASE("symbolic alpha substitutes to the numeric system") {
    const Algebra& a7 = algebra_by_id("A7");
    const auto symbolic = gen_constraints(a7);
    std::array<Poly, kNumVars> vars;
    for (std::size_t v = 0; v < kNumVars; ++v) vars[v] = Poly::var(static_cast<Var>(v));
    vars[static_cast<std::size_t>(Var::alpha)] = Poly(Rational(2));
    std::vector<Poly> substituted;
    for (const auto& p : symbolic.polys) substituted.push_back(p.eval<Poly>(std::span<const Poly, kNumVars>(vars)));
    CHECK(ConstraintSystem::canonical("A7", Rational(2), substituted) == gen_constraints(a7, Rational(2)));
  }
}

TEST_CASE("published systems agree with the generated ones on a small grid") {
  const GridSpec grid = GridSpec::range(-1, 1);
  for (const auto& alg : catalog()) {
    std::vector<Rational> alphas;
    if (alg.parametric()) alphas = {Rational(3, 16), Rational(-1)};
    CHECK_MESSAGE(!systems_equivalent_on_grid(gen_constraints(alg), paper_system(alg), grid, alphas).has_value(),
                  alg.id);
  }
}

TEST_CASE("the uncorrected A1 system has a counterexample") {
  const auto& uncorrected = uncorrected_paper_systems();
  const auto it = std::find_if(uncorrected.begin(), uncorrected.end(), [](const auto& u) { return u.algebra == "A1"; });
  REQUIRE(it != uncorrected.end());
  CHECK_FALSE(it->correction.empty());
  std::vector<Poly> polys;
  for (const auto& p : it->polys) polys.push_back(parse_poly(p));
  const auto published = ConstraintSystem::canonical("A1", std::nullopt, polys);
  const auto generated = gen_constraints(algebra_by_id("A1"));

  const auto witness = systems_equivalent_on_grid(generated, published, GridSpec::range(-2, 2), {});
  REQUIRE(witness.has_value());
  const std::array<long, 9> expected = {-2, 0, 0, -2, 0, -1, 2, -2, -1};
  for (std::size_t i = 0; i < 9; ++i) CHECK(witness->values[i] == Rational(expected[i]));

  // The first witness does not depend on the number of workers.
  const auto threaded = systems_equivalent_on_grid(generated, published, GridSpec::range(-2, 2), {}, 3);
  REQUIRE(threaded.has_value());
  CHECK(threaded->values == witness->values);
}

TEST_CASE("a system that mentions alpha needs alpha values") {
  const Algebra& a7 = algebra_by_id("A7");
  CHECK_THROWS_AS(systems_equivalent_on_grid(gen_constraints(a7), paper_system(a7), GridSpec::range(0, 1), {}),
                  InvalidAlpha);
}

TEST_CASE("reduction exposes linear members and keeps the zero set") {
  const Algebra& a12 = algebra_by_id("A12");
  const auto reduced = reduce_system(gen_constraints(a12));
  const Poly target = parse_poly("p3 - k1");
  CHECK(std::find(reduced.polys.begin(), reduced.polys.end(), normalize_sign(target)) != reduced.polys.end());
  CHECK(reduced == parse_system("A12", {"k3", "l1", "l2 - k1", "l3", "p3 - k1"}));

  SUBCASE("squares of linear forms collapse") {
    const auto sys = parse_system("X", {"(k1 - l2)^2", "k1*l2 - l2^2 + p1"});
    CHECK(reduce_system(sys) == parse_system("X", {"k1 - l2", "p1"}));
  }

  const GridSpec grid = GridSpec::range(-1, 1);
  for (const auto& alg : catalog()) {
    std::vector<Rational> alphas;
    if (alg.parametric()) alphas = {Rational(3, 16), Rational(2)};
    const auto raw = gen_constraints(alg);
    CHECK_MESSAGE(!systems_equivalent_on_grid(raw, reduce_system(raw), grid, alphas).has_value(), alg.id);
  }
}

TEST_CASE("grid specifications") {
  const GridSpec r = GridSpec::parse("-2..2");
  CHECK(r.values.size() == 5);
  CHECK(r.values.front() == Rational(-2));
  CHECK(r.text == "-2..2");
  CHECK(r.points() == 1953125);

  const GridSpec l = GridSpec::parse("1, 0, 1/2, 0");
  REQUIRE(l.values.size() == 3);
  CHECK(l.values[1] == Rational(1, 2));
  CHECK(l.text == "0,1/2,1");

  CHECK_THROWS_AS(GridSpec::parse("2..1"), ParseError);
  CHECK_THROWS_AS(GridSpec::parse("1/2..3"), ParseError);
  CHECK_THROWS_AS(GridSpec::parse("0,,1"), Error);
}
