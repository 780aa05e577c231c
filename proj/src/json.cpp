#include "leibniz/json.hpp"

#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"

namespace leibniz {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key, std::size_t size = 0) {
  const Json& v = field(j, key);
  if (!v.is_array() || (size != 0 && v.size() != size)) {
    throw ValidationError(std::string("field '") + key + "' has the wrong shape");
  }
  return v;
}

Json alpha_json(const std::optional<Rational>& alpha) { return alpha ? Json(alpha->str()) : Json(nullptr); }

std::optional<Rational> alpha_from(const Json& j) {
  const Json& v = field(j, "alpha");
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw ValidationError("alpha must be null or a rational string");
  return Rational::parse(v.get<std::string>());
}

Var var_from(const std::string& name) {
  const auto v = var_from_name(name);
  if (!v) throw ValidationError("unknown variable '" + name + "'");
  return *v;
}

std::uint64_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw ValidationError(std::string("field '") + key + "' must be a count");
  return v.get<std::uint64_t>();
}

}  // namespace

Json to_json(const Algebra& alg) {
  Json validity = Json::array();
  for (const auto& c : alg.validity) validity.push_back(c.str());
  Json table = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < 3; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < 3; ++k) cell.push_back(to_string(alg.sc.at(i, j, k)));
      row.push_back(cell);
    }
    table.push_back(row);
  }
  return Json{{"id", alg.id}, {"validity", validity}, {"table", table}};
}

Algebra algebra_from_json(const Json& j) {
  Algebra alg;
  alg.id = string_field(j, "id");
  for (const auto& c : array_field(j, "validity")) {
    auto cond = c.is_string() ? AlphaCondition::parse(c.get<std::string>()) : std::nullopt;
    if (!cond) throw ValidationError("bad validity condition " + c.dump());
    alg.validity.push_back(*cond);
  }
  const Json& table = array_field(j, "table", 3);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!table[i].is_array() || table[i].size() != 3) throw ValidationError("table row must have 3 cells");
    for (std::size_t jj = 0; jj < 3; ++jj) {
      const Json& cell = table[i][jj];
      if (!cell.is_array() || cell.size() != 3) throw ValidationError("table cell must have 3 coordinates");
      for (std::size_t k = 0; k < 3; ++k) {
        if (!cell[k].is_string()) throw ValidationError("structure constants must be strings");
        Poly p = parse_poly(cell[k].get<std::string>());
        for (std::size_t v = 0; v < kNumVars; ++v) {
          if (static_cast<Var>(v) != Var::alpha && p.uses(static_cast<Var>(v))) {
            throw ValidationError("structure constants may only use alpha");
          }
        }
        alg.sc.at(i, jj, k) = std::move(p);
      }
    }
  }
  return alg;
}

Json to_json(const Family& f) {
  Json params = Json::array();
  for (Var v : f.params) params.push_back(std::string(var_name(v)));
  Json matrix = Json::array();
  for (const auto& row : f.matrix) {
    Json r = Json::array();
    for (const auto& entry : row) r.push_back(to_string(entry));
    matrix.push_back(r);
  }
  Json conditions = Json::array();
  for (const auto& c : f.conditions) conditions.push_back(to_string(c));
  Json slots = Json::object();
  for (Var v : f.params) {
    const auto it = f.slots.find(v);
    if (it != f.slots.end()) slots[std::string(var_name(v))] = Json::array({it->second.row, it->second.col});
  }
  return Json{{"id", f.id.str()},
              {"algebra", f.algebra},
              {"params", params},
              {"radical", f.radical ? Json(f.radical->str()) : Json(nullptr)},
              {"matrix", matrix},
              {"conditions", conditions},
              {"slots", slots}};
}

Family family_from_json(const Json& j) {
  Family f;
  f.id = FamilyId::parse(string_field(j, "id"));
  f.algebra = string_field(j, "algebra");
  for (const auto& p : array_field(j, "params")) {
    if (!p.is_string()) throw ValidationError("params must be variable names");
    f.params.push_back(var_from(p.get<std::string>()));
  }
  const Json& radical = field(j, "radical");
  if (!radical.is_null()) {
    if (!radical.is_string()) throw ValidationError("radical must be null or a rule string");
    f.radical = RadicalRule::parse(radical.get<std::string>());
  }
  const Json& matrix = array_field(j, "matrix", 3);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!matrix[i].is_array() || matrix[i].size() != 3) throw ValidationError("matrix rows need 3 entries");
    for (std::size_t k = 0; k < 3; ++k) {
      if (!matrix[i][k].is_string()) throw ValidationError("matrix entries must be strings");
      f.matrix[i][k] = parse_expr(matrix[i][k].get<std::string>());
    }
  }
  for (const auto& c : array_field(j, "conditions")) {
    if (!c.is_string()) throw ValidationError("conditions must be strings");
    f.conditions.push_back(parse_condition(c.get<std::string>()));
  }
  const Json& slots = field(j, "slots");
  if (!slots.is_object()) throw ValidationError("slots must be an object");
  for (const auto& [name, pos] : slots.items()) {
    if (!pos.is_array() || pos.size() != 2 || !pos[0].is_number_unsigned() || !pos[1].is_number_unsigned() ||
        pos[0].get<std::size_t>() > 2 || pos[1].get<std::size_t>() > 2) {
      throw ValidationError("slot of " + name + " must be [row, col]");
    }
    f.slots[var_from(name)] = Slot{pos[0].get<std::size_t>(), pos[1].get<std::size_t>()};
  }
  const auto problems = check_family_invariants(f);
  if (!problems.empty()) throw ValidationError(problems.front());
  return f;
}

Json to_json(const ConstraintSystem& sys) {
  Json polys = Json::array();
  for (const auto& p : sys.polys) polys.push_back(to_string(p));
  return Json{{"algebra", sys.algebra}, {"alpha", alpha_json(sys.alpha)}, {"polys", polys}};
}

ConstraintSystem constraint_system_from_json(const Json& j) {
  std::vector<Poly> polys;
  for (const auto& p : array_field(j, "polys")) {
    if (!p.is_string()) throw ValidationError("polys must be strings");
    polys.push_back(parse_poly(p.get<std::string>()));
  }
  return ConstraintSystem::canonical(string_field(j, "algebra"), alpha_from(j), std::move(polys));
}

Json to_json(const GridReport& report) {
  Json unclassified = Json::array();
  for (const auto& n : report.unclassified) unclassified.push_back(matrix_to_string(n));
  Json hits = Json::object();
  for (const auto& [id, count] : report.family_hits) hits[id] = count;
  return Json{{"algebra", report.algebra},     {"alpha", alpha_json(report.alpha)},
              {"entries", report.entries},     {"total", report.total},
              {"found", report.found},         {"unclassified", unclassified},
              {"family_hits", hits}};
}

GridReport grid_report_from_json(const Json& j) {
  GridReport r;
  r.algebra = string_field(j, "algebra");
  r.alpha = alpha_from(j);
  r.entries = string_field(j, "entries");
  r.total = count_field(j, "total");
  r.found = count_field(j, "found");
  for (const auto& m : array_field(j, "unclassified")) {
    if (!m.is_string()) throw ValidationError("unclassified matrices must be strings");
    r.unclassified.push_back(parse_matrix(m.get<std::string>()));
  }
  if (j.contains("family_hits")) {
    const Json& hits = j.at("family_hits");
    if (!hits.is_object()) throw ValidationError("family_hits must be an object");
    for (const auto& [id, count] : hits.items()) {
      if (!count.is_number_unsigned()) throw ValidationError("family hit counts must be counts");
      r.family_hits[id] = count.get<std::uint64_t>();
    }
  }
  return r;
}

Json to_json(const Binding& b) {
  Json out = Json::object();
  for (const auto& [v, value] : b) out[std::string(var_name(v))] = value.str();
  return out;
}

Binding binding_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("binding must be an object");
  Binding b;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_string()) throw ValidationError("binding values must be strings");
    b[var_from(name)] = Scalar::parse(value.get<std::string>());
  }
  return b;
}

Json classification_json(const std::string& algebra, const std::optional<Rational>& alpha, const OperatorMatrix& n,
                         const Classification& c) {
  Json matches = Json::array();
  for (const auto& m : c.matches) matches.push_back(Json{{"family", m.family.str()}, {"binding", to_json(m.binding)}});
  return Json{{"algebra", algebra},
              {"alpha", alpha_json(alpha)},
              {"matrix", matrix_to_string(n)},
              {"nijenhuis", c.nijenhuis},
              {"matches", matches}};
}

}  // namespace leibniz
