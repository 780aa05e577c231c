#include "leibniz/algebra.hpp"

#include <cctype>
#include <initializer_list>
#include <stdexcept>

#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"

namespace leibniz {

std::string_view compare_op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
    case CompareOp::Ne: return "!=";
  }
  return "?";
}

bool AlphaCondition::holds(const Rational& alpha) const {
  switch (op) {
    case CompareOp::Lt: return alpha < bound;
    case CompareOp::Le: return alpha <= bound;
    case CompareOp::Gt: return alpha > bound;
    case CompareOp::Ge: return alpha >= bound;
    case CompareOp::Ne: return alpha != bound;
  }
  return false;
}

std::string AlphaCondition::str() const {
  return "alpha " + std::string(compare_op_symbol(op)) + " " + bound.str();
}

std::optional<AlphaCondition> AlphaCondition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::string_view rest;
  if (s.rfind("alpha", 0) == 0) {
    rest = std::string_view(s).substr(5);
  } else if (s.rfind("α", 0) == 0) {
    rest = std::string_view(s).substr(std::string_view("α").size());
  } else {
    return std::nullopt;
  }
  static constexpr std::array<std::pair<std::string_view, CompareOp>, 5> kOps = {{
      {"<=", CompareOp::Le}, {">=", CompareOp::Ge}, {"!=", CompareOp::Ne}, {"<", CompareOp::Lt}, {">", CompareOp::Gt}}};
  for (const auto& [sym, op] : kOps) {
    if (rest.substr(0, sym.size()) == sym) {
      try {
        return AlphaCondition{op, Rational::parse(rest.substr(sym.size()))};
      } catch (const ParseError&) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

bool Algebra::parametric() const {
  for (const auto& p : sc.c) {
    if (p.uses(Var::alpha)) return true;
  }
  return false;
}

void check_alpha(const Algebra& alg, const std::optional<Rational>& alpha) {
  if (alg.parametric() && !alpha) throw InvalidAlpha(alg.id + " is parametric: alpha is required");
  if (!alg.parametric() && alpha) throw InvalidAlpha(alg.id + " does not depend on alpha");
  if (!alpha) return;
  for (const auto& cond : alg.validity) {
    if (!cond.holds(*alpha)) throw InvalidAlpha("alpha = " + alpha->str() + " violates " + cond.str() + " for " + alg.id);
  }
}

namespace {

Scalar eval_at_alpha(const Poly& p, const std::optional<Rational>& alpha) {
  if (p.is_constant()) return Scalar(p.constant_value());
  std::array<Scalar, kNumVars> values{};
  values[static_cast<std::size_t>(Var::alpha)] = Scalar(*alpha);
  return p.eval<Scalar>(std::span<const Scalar, kNumVars>(values));
}

Poly substitute_alpha(const Poly& p, const Rational& alpha) {
  if (!p.uses(Var::alpha)) return p;
  std::vector<Poly::Term> terms;
  const auto ai = static_cast<std::size_t>(Var::alpha);
  for (auto [mono, coeff] : p.terms()) {
    coeff *= pow(alpha, mono.exp[ai]);
    mono.exp[ai] = 0;
    terms.emplace_back(mono, coeff);
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace

BracketTable<Scalar> scalar_table(const Algebra& alg, const std::optional<Rational>& alpha) {
  check_alpha(alg, alpha);
  return make_table<Scalar>(alg.sc, [&](const Poly& p) { return eval_at_alpha(p, alpha); });
}

BracketTable<Poly> poly_table(const Algebra& alg, const std::optional<Rational>& alpha) {
  if (alpha) check_alpha(alg, alpha);
  return make_table<Poly>(alg.sc, [&](const Poly& p) { return alpha ? substitute_alpha(p, *alpha) : p; });
}

Vec3<Scalar> bracket(const Algebra& alg, const Vec3<Scalar>& x, const Vec3<Scalar>& y,
                     const std::optional<Rational>& alpha) {
  return scalar_table(alg, alpha).bracket(x, y);
}

Vec3<Poly> leibniz_defect(const Algebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  if (i >= alg.sc.dim || j >= alg.sc.dim || k >= alg.sc.dim) throw std::out_of_range("basis index out of range");
  const BracketTable<Poly> t = poly_table(alg);
  auto basis = [](std::size_t n) {
    Vec3<Poly> v{Poly(0), Poly(0), Poly(0)};
    v[n] = Poly(1);
    return v;
  };
  const Vec3<Poly> x = basis(i), y = basis(j), z = basis(k);
  const Vec3<Poly> lhs = t.bracket(x, t.bracket(y, z));
  const Vec3<Poly> a = t.bracket(t.bracket(x, y), z);
  const Vec3<Poly> b = t.bracket(y, t.bracket(x, z));
  Vec3<Poly> defect;
  for (std::size_t n = 0; n < 3; ++n) defect[n] = lhs[n] - a[n] - b[n];
  return defect;
}

std::vector<Triple> validate_leibniz(const Algebra& alg) {
  std::vector<Triple> failing;
  for (std::size_t i = 0; i < alg.sc.dim; ++i) {
    for (std::size_t j = 0; j < alg.sc.dim; ++j) {
      for (std::size_t k = 0; k < alg.sc.dim; ++k) {
        const Vec3<Poly> d = leibniz_defect(alg, i, j, k);
        if (!d[0].is_zero() || !d[1].is_zero() || !d[2].is_zero()) failing.push_back({i, j, k});
      }
    }
  }
  return failing;
}

Algebra make_algebra(std::string id, const std::array<std::array<std::array<std::string_view, 3>, 3>, 3>& table,
                     std::vector<AlphaCondition> validity) {
  Algebra alg;
  alg.id = std::move(id);
  alg.validity = std::move(validity);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) alg.sc.at(i, j, k) = parse_poly(table[i][j][k]);
    }
  }
  return alg;
}

namespace {

using Table = std::array<std::array<std::array<std::string_view, 3>, 3>, 3>;

// One nonzero product [e_i, e_j] = (x, y, z) in coordinates of (e, f, g).
struct Product {
  std::size_t i, j;
  std::array<std::string_view, 3> value;
};

Table products(std::initializer_list<Product> list) {
  Table t;
  for (auto& row : t) {
    for (auto& cell : row) cell = {"0", "0", "0"};
  }
  for (const auto& p : list) t[p.i][p.j] = p.value;
  return t;
}

constexpr std::size_t e = 0, f = 1, g = 2;

std::vector<Algebra> build_catalog() {
  const std::vector<AlphaCondition> nonzero_alpha = {{CompareOp::Ne, Rational(0)}};
  std::vector<Algebra> out;
  out.push_back(make_algebra("A1", products({{f, f, {"1", "0", "0"}}, {f, g, {"0", "1", "0"}},
                                             {g, e, {"-2", "0", "0"}}, {g, f, {"0", "-1", "0"}}})));
  out.push_back(make_algebra("A2", products({{g, e, {"1", "1", "0"}}, {g, g, {"1", "0", "0"}}})));
  out.push_back(make_algebra("A3",
                             products({{f, g, {"0", "1", "0"}}, {g, e, {"alpha", "0", "0"}}, {g, f, {"0", "-1", "0"}}}),
                             nonzero_alpha));
  out.push_back(make_algebra("A4",
                             products({{f, g, {"0", "1", "0"}}, {g, f, {"0", "-1", "0"}}, {g, g, {"1", "0", "0"}}})));
  out.push_back(make_algebra("A5", products({{f, f, {"1", "0", "0"}}, {g, g, {"1", "0", "0"}}})));
  out.push_back(make_algebra("A6", products({{f, f, {"1", "0", "0"}}, {g, g, {"-1", "0", "0"}}})));
  out.push_back(make_algebra("A7",
                             products({{f, f, {"1", "0", "0"}}, {g, f, {"1", "0", "0"}}, {g, g, {"alpha", "0", "0"}}}),
                             nonzero_alpha));
  out.push_back(make_algebra("A8", products({{g, f, {"1", "0", "0"}}})));
  out.push_back(make_algebra("A9", products({{g, e, {"0", "1", "0"}}, {g, f, {"1", "0", "0"}}})));
  out.push_back(make_algebra("A10", products({{g, e, {"0", "1", "0"}}, {g, f, {"-1", "0", "0"}}})));
  out.push_back(
      make_algebra("A11", products({{g, e, {"0", "1", "0"}}, {g, f, {"alpha", "1", "0"}}}), nonzero_alpha));
  out.push_back(make_algebra("A12", products({{g, e, {"0", "1", "0"}}, {g, g, {"1", "0", "0"}}})));
  out.push_back(make_algebra("A13", products({{g, e, {"1", "0", "0"}}, {g, f, {"0", "1", "0"}}})));
  return out;
}

}  // namespace

const std::vector<Algebra>& catalog() {
  static const std::vector<Algebra> algebras = build_catalog();
  return algebras;
}

const Algebra& algebra_by_id(std::string_view id) {
  for (const auto& alg : catalog()) {
    if (alg.id == id) return alg;
  }
  throw std::out_of_range("unknown algebra id '" + std::string(id) + "'");
}

}  // namespace leibniz
