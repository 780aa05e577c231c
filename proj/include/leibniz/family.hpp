#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/nijenhuis.hpp"
#include "leibniz/rational_fn.hpp"

namespace leibniz {

/// Group number (equal to the algebra index) and item index: {7, 4} prints as "2.7/4".
struct FamilyId {
  int group = 0;
  int item = 0;

  std::string str() const;
  /// Accepts "2.7/4"; throws ParseError otherwise.
  static FamilyId parse(std::string_view text);

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

/// expr != 0. Stored as a normalized rational function.
struct NonzeroExpr {
  RationalFn expr;
  friend bool operator==(const NonzeroExpr&, const NonzeroExpr&) = default;
};

using SideCondition = std::variant<NonzeroExpr, AlphaCondition>;

/// "l1 != 0" or "alpha <= 1/4".
std::string to_string(const SideCondition& c, bool unicode = false);
/// Accepts "lhs != rhs" (stored as lhs - rhs) and the AlphaCondition forms.
SideCondition parse_condition(std::string_view text);

struct Slot {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Family {
  FamilyId id;
  std::string algebra;
  /// Free parameters among k1..p3, in variable order.
  std::vector<Var> params;
  SymOperator matrix;
  std::optional<RadicalRule> radical;
  std::vector<SideCondition> conditions;
  /// Entry at which each parameter appears bare.
  std::map<Var, Slot> slots;

  bool uses_radical() const;
  friend bool operator==(const Family&, const Family&) = default;
};

/// Builds a family from a matrix literal "a,b,c;d,e,f;g,h,i" of expressions.
/// Parameters are the matrix variables that occur; each slot is the first
/// (row-major) entry equal to the bare parameter. The radical rule is attached
/// when s occurs.
Family make_family(FamilyId id, std::string algebra, std::string_view matrix,
                   const std::vector<std::string_view>& conditions);

/// All published families, ordered by id.
const std::vector<Family>& family_catalog();
std::vector<const Family*> families_of(std::string_view algebra);
/// Throws std::out_of_range for an unknown id.
const Family& family_by_id(const FamilyId& id);

/// Published families whose printed form fails the identity, kept verbatim
/// next to the correction applied in the catalog.
struct UncorrectedFamily {
  Family family;
  std::string correction;
};
const std::vector<UncorrectedFamily>& uncorrected_families();

/// The rule s^2 = 1 - 4*alpha (A7) or s^2 = 1 + 4*alpha (A11); nullopt for
/// other algebras.
std::optional<RadicalRule> radical_rule_for(std::string_view algebra);

struct ResidualComponent {
  BasisPair pair;
  std::size_t coordinate = 0;
  RationalFn value;
};

/// Nonzero components of the symbolic residual, alpha kept symbolic and s
/// reduced by the family's radical rule. Empty means the family verifies.
std::vector<ResidualComponent> verify_family(const Family& f);

/// Structural checks: bare slots, guarded denominators, radical iff s is
/// used, alpha conditions only on parametric algebras. Returns the problems
/// found, empty when the family is well formed.
std::vector<std::string> check_family_invariants(const Family& f);

using Binding = std::map<Var, Scalar>;

/// Nonnegative root of the family's radicand at alpha: a rational scalar for
/// perfect squares, an element of Q(sqrt(d)) otherwise. Throws RadicalNegative.
Scalar radical_value(const RadicalRule& rule, const Rational& alpha);

/// Throws UnboundVariable, InvalidAlpha, SideConditionViolated,
/// RadicalNegative or DenominatorVanishes.
OperatorMatrix instantiate(const Family& f, const Binding& values, const std::optional<Rational>& alpha);

/// Values found at the family's slots.
Binding read_slots(const Family& f, const OperatorMatrix& n);

}  // namespace leibniz
