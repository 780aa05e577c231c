#include "leibniz/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"

namespace leibniz {

std::string FamilyId::str() const { return "2." + std::to_string(group) + "/" + std::to_string(item); }

FamilyId FamilyId::parse(std::string_view text) {
  // "2.7/4": group 7 (the families of A7) and item 4 within it.
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash == std::string_view::npos || dot == std::string_view::npos || dot > slash) {
    throw ParseError("family id must look like 2.7/4", 0);
  }
  auto number = [&](std::string_view digits, std::size_t pos) {
    if (digits.empty() || digits.size() > 4) throw ParseError("bad number in family id", pos);
    int value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("bad number in family id", pos);
      value = value * 10 + (c - '0');
    }
    return value;
  };
  if (number(text.substr(0, dot), 0) != 2) throw ParseError("family ids start with 2.", 0);
  FamilyId id;
  id.group = number(text.substr(dot + 1, slash - dot - 1), dot + 1);
  id.item = number(text.substr(slash + 1), slash + 1);
  return id;
}

std::string to_string(const SideCondition& c, bool unicode) {
  if (const auto* nz = std::get_if<NonzeroExpr>(&c)) return to_string(nz->expr, unicode) + " != 0";
  const auto& ac = std::get<AlphaCondition>(c);
  if (!unicode) return ac.str();
  return "α " + std::string(compare_op_symbol(ac.op)) + " " + ac.bound.str();
}

SideCondition parse_condition(std::string_view text) {
  if (auto ac = AlphaCondition::parse(text)) return *ac;
  const auto ne = text.find("!=");
  if (ne == std::string_view::npos) throw ParseError("side condition must contain !=", 0);
  const RationalFn lhs = parse_expr(text.substr(0, ne));
  const RationalFn rhs = parse_expr(text.substr(ne + 2));
  return NonzeroExpr{lhs - rhs};
}

bool Family::uses_radical() const {
  for (const auto& row : matrix) {
    for (const auto& entry : row) {
      if (entry.uses(Var::s)) return true;
    }
  }
  return std::any_of(conditions.begin(), conditions.end(), [](const SideCondition& c) {
    const auto* nz = std::get_if<NonzeroExpr>(&c);
    return nz != nullptr && nz->expr.uses(Var::s);
  });
}

std::optional<RadicalRule> radical_rule_for(std::string_view algebra) {
  if (algebra == "A7") return RadicalRule{Rational(1), Rational(-4)};
  if (algebra == "A11") return RadicalRule{Rational(1), Rational(4)};
  return std::nullopt;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Family make_family(FamilyId id, std::string algebra, std::string_view matrix,
                   const std::vector<std::string_view>& conditions) {
  Family f;
  f.id = id;
  f.algebra = std::move(algebra);
  const auto rows = split(matrix, ';');
  if (rows.size() != 3) throw ParseError("family matrix needs three rows", 0);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto cells = split(rows[i], ',');
    if (cells.size() != 3) throw ParseError("family matrix row needs three entries", 0);
    for (std::size_t j = 0; j < 3; ++j) f.matrix[i][j] = parse_expr(cells[j]);
  }
  for (const auto& c : conditions) f.conditions.push_back(parse_condition(c));

  for (Var v : kMatrixVars) {
    bool used = false;
    for (const auto& row : f.matrix) {
      for (const auto& entry : row) used = used || entry.uses(v);
    }
    for (const auto& c : f.conditions) {
      if (const auto* nz = std::get_if<NonzeroExpr>(&c)) used = used || nz->expr.uses(v);
    }
    if (!used) continue;
    f.params.push_back(v);
    const RationalFn bare = RationalFn::var(v);
    for (std::size_t r = 0; r < 9 && !f.slots.count(v); ++r) {
      if (f.matrix[r / 3][r % 3] == bare) f.slots[v] = Slot{r / 3, r % 3};
    }
  }
  if (f.uses_radical()) f.radical = radical_rule_for(f.algebra);
  return f;
}

std::vector<const Family*> families_of(std::string_view algebra) {
  std::vector<const Family*> out;
  for (const auto& f : family_catalog()) {
    if (f.algebra == algebra) out.push_back(&f);
  }
  return out;
}

const Family& family_by_id(const FamilyId& id) {
  for (const auto& f : family_catalog()) {
    if (f.id == id) return f;
  }
  throw std::out_of_range("unknown family " + id.str());
}

std::vector<ResidualComponent> verify_family(const Family& f) {
  const Algebra& alg = algebra_by_id(f.algebra);
  const auto table = make_table<RationalFn>(alg.sc, [](const Poly& p) { return RationalFn(p); });
  std::vector<ResidualComponent> failing;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3<RationalFn> r = basis_residual(table, f.matrix, i, j);
      for (std::size_t k = 0; k < 3; ++k) {
        const bool zero = f.radical ? r[k].is_zero(*f.radical) : r[k].is_zero();
        if (zero) continue;
        RationalFn value = r[k];
        if (f.radical) value = RationalFn(reduce_radical(r[k].num(), *f.radical), r[k].den());
        failing.push_back({{i, j}, k, std::move(value)});
      }
    }
  }
  return failing;
}

namespace {

// Strips every factor of `den` that is a power of some guard polynomial.
// Returns true when only a constant remains.
bool guarded(Poly den, const std::vector<Poly>& guards) {
  bool progress = true;
  while (!den.is_constant() && progress) {
    progress = false;
    for (const auto& g : guards) {
      if (g.is_constant()) continue;
      if (auto q = exact_divide(den, g)) {
        den = std::move(*q);
        progress = true;
      }
    }
  }
  return den.is_constant();
}

}  // namespace

std::vector<std::string> check_family_invariants(const Family& f) {
  std::vector<std::string> problems;
  const std::string label = f.id.str() + ": ";
  const Algebra* alg = nullptr;
  try {
    alg = &algebra_by_id(f.algebra);
  } catch (const std::out_of_range&) {
    problems.push_back(label + "unknown algebra " + f.algebra);
    return problems;
  }

  for (Var v : f.params) {
    const auto it = f.slots.find(v);
    if (it == f.slots.end()) {
      problems.push_back(label + "parameter " + std::string(var_name(v)) + " has no slot");
    } else if (!(f.matrix[it->second.row][it->second.col] == RationalFn::var(v))) {
      problems.push_back(label + "slot of " + std::string(var_name(v)) + " is not bare");
    }
  }

  std::vector<Poly> guards;
  bool alpha_nonzero = std::any_of(alg->validity.begin(), alg->validity.end(), [](const AlphaCondition& c) {
    return c.op == CompareOp::Ne && c.bound.is_zero();
  });
  for (const auto& c : f.conditions) {
    if (const auto* nz = std::get_if<NonzeroExpr>(&c)) {
      guards.push_back(normalize_sign(nz->expr.num()));
      for (Var v : kMatrixVars) {
        if (nz->expr.uses(v) && std::find(f.params.begin(), f.params.end(), v) == f.params.end()) {
          problems.push_back(label + "condition uses non-parameter " + std::string(var_name(v)));
        }
      }
    } else {
      const auto& ac = std::get<AlphaCondition>(c);
      if (!alg->parametric()) problems.push_back(label + "alpha condition on non-parametric algebra");
      if (ac.op == CompareOp::Ne && ac.bound.is_zero()) alpha_nonzero = true;
    }
  }
  if (alpha_nonzero) guards.push_back(Poly::var(Var::alpha));

  auto check_den = [&](const RationalFn& fn, const std::string& where) {
    if (!guarded(fn.den(), guards)) problems.push_back(label + "unguarded denominator in " + where);
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      check_den(f.matrix[i][j], "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  for (const auto& c : f.conditions) {
    if (const auto* nz = std::get_if<NonzeroExpr>(&c)) check_den(nz->expr, "condition " + to_string(c));
  }

  const bool uses_s = f.uses_radical();
  if (uses_s != f.radical.has_value()) problems.push_back(label + "radical rule present iff s is used");
  if (f.radical && f.radical != radical_rule_for(f.algebra)) problems.push_back(label + "wrong radical rule");
  for (const auto& row : f.matrix) {
    for (const auto& entry : row) {
      if (entry.uses(Var::alpha) && !alg->parametric()) problems.push_back(label + "alpha in non-parametric family");
    }
  }
  return problems;
}

Scalar radical_value(const RadicalRule& rule, const Rational& alpha) {
  const Rational d = rule.radicand_at(alpha);
  if (d.sign() < 0) throw RadicalNegative(rule.str() + " is negative at alpha = " + alpha.str());
  return Scalar::sqrt(d);
}

OperatorMatrix instantiate(const Family& f, const Binding& values, const std::optional<Rational>& alpha) {
  const Algebra& alg = algebra_by_id(f.algebra);
  check_alpha(alg, alpha);
  Point point{};
  for (Var v : f.params) {
    const auto it = values.find(v);
    if (it == values.end()) throw UnboundVariable(std::string(var_name(v)));
    point[static_cast<std::size_t>(v)] = it->second;
  }
  for (const auto& [v, value] : values) {
    if (std::find(f.params.begin(), f.params.end(), v) == f.params.end()) {
      throw ValidationError(std::string(var_name(v)) + " is not a parameter of family " + f.id.str());
    }
  }
  if (alpha) point[static_cast<std::size_t>(Var::alpha)] = Scalar(*alpha);

  for (const auto& c : f.conditions) {
    if (const auto* ac = std::get_if<AlphaCondition>(&c); ac != nullptr && !ac->holds(*alpha)) {
      throw SideConditionViolated(to_string(c));
    }
  }
  const RadicalRule* rule = nullptr;
  if (f.radical) {
    point[static_cast<std::size_t>(Var::s)] = radical_value(*f.radical, *alpha);
    rule = &*f.radical;
  }
  for (const auto& c : f.conditions) {
    const auto* nz = std::get_if<NonzeroExpr>(&c);
    if (nz == nullptr) continue;
    bool holds = false;
    try {
      holds = !evaluate(nz->expr, point, rule).is_zero();
    } catch (const DenominatorVanishes&) {
      holds = false;
    }
    if (!holds) throw SideConditionViolated(to_string(c));
  }

  OperatorMatrix n;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) n[i][j] = evaluate(f.matrix[i][j], point, rule);
  }
  return n;
}

Binding read_slots(const Family& f, const OperatorMatrix& n) {
  Binding b;
  for (const auto& [v, slot] : f.slots) b[v] = n[slot.row][slot.col];
  return b;
}

}  // namespace leibniz
