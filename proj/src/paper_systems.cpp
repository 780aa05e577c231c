#include <map>
#include <stdexcept>

#include "leibniz/expr.hpp"
#include "leibniz/nijenhuis.hpp"

namespace leibniz {

namespace {

// Published if-and-only-if conditions, one list per algebra. Variables follow
// the row convention: (k1,k2,k3) = N(e), (l1,l2,l3) = N(f), (p1,p2,p3) = N(g).
const std::map<std::string, std::vector<std::string>, std::less<>>& published() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> systems = {
      {"A1",
       {"k2", "k3", "(k1-l2)^2-2*l1*l3", "-l1*p3+l2*p2+l1*k1-l3*p1-p2*k1",
        // printed with -p2^2; the residual gives +p2^2
        "-2*p1*p3+p2^2+2*p1*k1"}},
      {"A2",
       {"k3", "l3", "(p3-k1)^2+p1*(p3-k1-l1)+k2*l1", "p1*(p3-k2-l2)+k2*(k1+l2-2*p3)", "l1*(p3-k1-l1)",
        "l1*(p3-k2-l2)", "(k2+l2-k1)*(l2-p3)+l1*k2"}},
      {"A3",
       {"k3", "k2*l3", "k2*l1", "k2*(p3-l2)", "l3*l1", "l3*p1*(1+alpha)+l1*(k1-p3)", "l3*p1+l1*(k1-p3)*(1+alpha)",
        "k2*p1", "p1*(p3-k1)"}},
      {"A4", {"k3", "l3", "k2*(p3-l2)", "k2*l1", "p3-k1", "k2*(k1+l2-2*p3)"}},
      {"A5", {"k2", "k3", "(k1-l2)^2+l3^2", "(p3-k1)^2+p2^2", "p2*(l2-k1)"}},
      {"A6", {"k2", "k3", "(l3-l2+k1)*(l3+l2-k1)", "p2*(l2-k1)+l3*(k1-p3)", "(p2-p3+k1)*(p2+p3-k1)"}},
      {"A7",
       {"k2", "k3", "(l2-k1)^2+l3*(l2-k1)+alpha*l3^2", "alpha*l3*(p3-k1)+p2*(l2+l3-k1)", "(l2-k1)*(p3-k1)-l3*p2",
        "alpha*(p3-k1)^2+p2*(p3-k1)+p2^2"}},
      {"A8", {"k2", "k3", "l3*(l2-k1)", "(p3-k1)*(l2-k1)", "p2*l3", "p2*(p3-k1)"}},
      {"A9",
       {"l3", "k3", "(k1-l2)*(p3-l2)-k2*(k2-l1)", "k2*(p3-k1)-l1*(p3-l2)", "l1*(k2-l1)-(k1-l2)*(p3-k1)",
        "p1*(p3-l2)-p2*k2", "p2*(p3-k1)-p1*l1"}},
      {"A10",
       {"k3", "l3", "(k1-l2)*(p3-l2)+k2*(l1+k2)", "l1*(l2-p3)+k2*(k1-p3)", "(k1-l2)*(p3-k1)-l1*(l1+k2)",
        "p1*(p3-l2)+p2*k2", "p2*(k1-p3)-p1*l1"}},
      {"A11",
       {"l3", "k3", "(p3-l2)*(k1+k2-l2)+k2*(l1-alpha*k2)", "alpha*k2*(p3-k1)+l1*(l2-p3-k2)",
        "alpha*k1*(k1-p3-l2)+l1*(k1-p3-l1)+alpha*p3*l2+alpha*k2*l1", "(p3-l2)*(p1+p2)-alpha*p2*k2",
        "alpha*p2*(p3-k1)-l1*(p1+p2)"}},
      {"A12", {"l1", "l3", "k3", "k1*p3+l2^2-k1*l2-p3*l2", "p1*p3+k1*k2+k2*l2-p1*l2-2*p3*k2", "p3-k1"}},
      {"A13", {"k3", "l3", "p1*(p3-k1)-p2*l1", "p2*(p3-l2)-p1*k2"}},
  };
  return systems;
}

}  // namespace

ConstraintSystem paper_system(const Algebra& alg) {
  const auto& systems = published();
  const auto it = systems.find(alg.id);
  if (it == systems.end()) throw std::out_of_range("no published system for " + alg.id);
  std::vector<Poly> polys;
  for (const auto& text : it->second) polys.push_back(parse_poly(text));
  return ConstraintSystem::canonical(alg.id, std::nullopt, std::move(polys));
}

const std::vector<UncorrectedSystem>& uncorrected_paper_systems() {
  static const std::vector<UncorrectedSystem> systems = {
      {"A1",
       {"k2", "k3", "(k1-l2)^2-2*l1*l3", "-l1*p3+l2*p2+l1*k1-l3*p1-p2*k1", "-2*p1*p3-p2^2+2*p1*k1"},
       "last condition: -p2^2 replaced by +p2^2"},
  };
  return systems;
}

}  // namespace leibniz
