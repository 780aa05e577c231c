#pragma once

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/classifier.hpp"
#include "leibniz/family.hpp"
#include "leibniz/nijenhuis.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

// Every object serializes expressions in the expression grammar and
// rationals as "a" or "a/b", so a dump is byte-stable. The *_from_json
// functions throw ValidationError on shape errors and ParseError on bad
// expressions.

/// {"id","validity":[...],"table":[[["c_e","c_f","c_g"], ...], ...]}
Json to_json(const Algebra& alg);
Algebra algebra_from_json(const Json& j);

/// {"id","algebra","params","radical","matrix","conditions","slots"}
Json to_json(const Family& f);
Family family_from_json(const Json& j);

/// {"algebra","alpha","polys"}
Json to_json(const ConstraintSystem& sys);
ConstraintSystem constraint_system_from_json(const Json& j);

/// {"algebra","alpha","entries","total","found","unclassified","family_hits"}
Json to_json(const GridReport& report);
GridReport grid_report_from_json(const Json& j);

Json to_json(const Binding& b);
Binding binding_from_json(const Json& j);

/// {"algebra","alpha","matrix","nijenhuis","matches":[{"family","binding"}]}
Json classification_json(const std::string& algebra, const std::optional<Rational>& alpha, const OperatorMatrix& n,
                         const Classification& c);

}  // namespace leibniz
