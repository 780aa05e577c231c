#include <algorithm>

#include "leibniz/error.hpp"
#include "leibniz/nijenhuis.hpp"
#include "leibniz/parallel.hpp"

namespace leibniz {

namespace {

Poly substitute_alpha(const Poly& p, const Rational& alpha) {
  std::vector<Poly::Term> terms;
  const auto ai = static_cast<std::size_t>(Var::alpha);
  for (auto [mono, coeff] : p.terms()) {
    coeff *= pow(alpha, mono.exp[ai]);
    mono.exp[ai] = 0;
    terms.emplace_back(mono, coeff);
  }
  return Poly::from_terms(std::move(terms));
}

// A polynomial in the nine matrix variables, evaluated on grid indices. Uses
// integer arithmetic when the grid and the coefficients allow it.
class GridPoly {
 public:
  GridPoly(Poly exact, const std::vector<Rational>& grid) : exact_(std::move(exact)), grid_(&grid) {
    for (const auto& v : grid) {
      if (!v.is_integer() || !v.numerator().fits_slong_p()) return;
      int_grid_.emplace_back(v.numerator().get_si());
    }
    if (exact_.is_zero()) {
      integral_ = true;
      return;
    }
    const Rational scale(content(exact_).inverse());
    const Poly scaled = exact_.scaled(scale);
    for (const auto& [mono, coeff] : scaled.terms()) {
      if (!coeff.is_integer() || !coeff.numerator().fits_slong_p()) return;
      int_terms_.push_back({mono, CheckedInt(coeff.numerator().get_si())});
    }
    integral_ = true;
  }

  bool vanishes(const std::array<std::uint32_t, 9>& index) const {
    if (integral_) {
      try {
        CheckedInt total(0);
        for (const auto& [mono, coeff] : int_terms_) {
          CheckedInt t = coeff;
          for (std::size_t v = 0; v < 9; ++v) {
            const CheckedInt x = int_grid_[index[v]];
            for (unsigned e = 0; e < mono.exp[v]; ++e) t = t * x;
          }
          total += t;
        }
        return total.is_zero();
      } catch (const CheckedInt::Overflow&) {
        // exact fallback below
      }
    }
    std::array<Rational, kNumVars> values{};
    for (std::size_t v = 0; v < 9; ++v) values[v] = (*grid_)[index[v]];
    return exact_.eval<Rational>(std::span<const Rational, kNumVars>(values)).is_zero();
  }

 private:
  struct IntTerm {
    Monomial mono;
    CheckedInt coeff;
  };
  Poly exact_;
  const std::vector<Rational>* grid_;
  std::vector<CheckedInt> int_grid_;
  std::vector<IntTerm> int_terms_;
  bool integral_ = false;
};

std::vector<GridPoly> compile(const ConstraintSystem& sys, const std::optional<Rational>& alpha,
                              const std::vector<Rational>& grid) {
  std::vector<GridPoly> out;
  for (const auto& p : sys.polys) {
    if (p.uses(Var::s)) throw DomainError("constraint system uses the radical symbol s");
    if (p.uses(Var::alpha) && !alpha) throw InvalidAlpha("system for " + sys.algebra + " depends on alpha");
    out.emplace_back(alpha ? substitute_alpha(p, *alpha) : p, grid);
  }
  return out;
}

bool all_vanish(const std::vector<GridPoly>& sys, const std::array<std::uint32_t, 9>& index) {
  return std::all_of(sys.begin(), sys.end(), [&](const GridPoly& p) { return p.vanishes(index); });
}

}  // namespace

std::optional<GridPoint> systems_equivalent_on_grid(const ConstraintSystem& a, const ConstraintSystem& b,
                                                    const GridSpec& grid, const std::vector<Rational>& alphas,
                                                    unsigned jobs) {
  std::vector<std::optional<Rational>> alpha_list;
  if (alphas.empty()) {
    alpha_list.emplace_back(std::nullopt);
  } else {
    for (const auto& al : alphas) alpha_list.emplace_back(al);
  }
  const auto n = static_cast<std::uint32_t>(grid.values.size());
  const std::uint64_t total = grid.points();
  for (const auto& alpha : alpha_list) {
    const std::vector<GridPoly> sa = compile(a, alpha, grid.values);
    const std::vector<GridPoly> sb = compile(b, alpha, grid.values);
    const auto chunks = parallel_chunks(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const auto digits = decode_index(idx, n);
        if (all_vanish(sa, digits) != all_vanish(sb, digits)) return std::optional<std::uint64_t>(idx);
      }
      return std::optional<std::uint64_t>();
    });
    for (const auto& hit : chunks) {
      if (!hit) continue;
      GridPoint point;
      const auto digits = decode_index(*hit, n);
      for (std::size_t v = 0; v < 9; ++v) point.values[v] = grid.values[digits[v]];
      point.alpha = alpha;
      return point;
    }
  }
  return std::nullopt;
}

}  // namespace leibniz
