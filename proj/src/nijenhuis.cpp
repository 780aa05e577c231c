#include "leibniz/nijenhuis.hpp"

#include <algorithm>

#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"

namespace leibniz {

SymOperator generic_operator() {
  SymOperator n;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) n[i][j] = RationalFn::var(kMatrixVars[3 * i + j]);
  }
  return n;
}

Vec3<Scalar> residual(const Algebra& alg, const OperatorMatrix& n, const Vec3<Scalar>& x, const Vec3<Scalar>& y,
                      const std::optional<Rational>& alpha) {
  return residual(scalar_table(alg, alpha), n, x, y);
}

NijenhuisChecker::NijenhuisChecker(const Algebra& alg, const std::optional<Rational>& alpha)
    : table_(scalar_table(alg, alpha)) {}

std::vector<BasisPair> NijenhuisChecker::failing_pairs(const OperatorMatrix& n) const {
  std::vector<BasisPair> failing;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3<Scalar> r = basis_residual(table_, n, i, j);
      if (!r[0].is_zero() || !r[1].is_zero() || !r[2].is_zero()) failing.push_back({i, j});
    }
  }
  return failing;
}

bool NijenhuisChecker::is_nijenhuis(const OperatorMatrix& n) const {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3<Scalar> r = basis_residual(table_, n, i, j);
      if (!r[0].is_zero() || !r[1].is_zero() || !r[2].is_zero()) return false;
    }
  }
  return true;
}

std::vector<BasisPair> nijenhuis_check(const Algebra& alg, const OperatorMatrix& n,
                                       const std::optional<Rational>& alpha) {
  return NijenhuisChecker(alg, alpha).failing_pairs(n);
}

namespace {

std::optional<std::int64_t> to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

FastNijenhuisChecker::FastNijenhuisChecker(const Algebra& alg, const std::optional<Rational>& alpha,
                                           const std::vector<Rational>& entries)
    : exact_(alg, alpha), entries_(entries) {
  mpz_class table_scale = 1;
  for (const auto& e : exact_.table().nonzero) table_scale = lcm(table_scale, e.c.as_rational().denominator());
  mpz_class entry_scale = 1;
  for (const auto& v : entries_) entry_scale = lcm(entry_scale, v.denominator());

  BracketTable<CheckedInt> table;
  for (const auto& e : exact_.table().nonzero) {
    const Rational scaled = e.c.as_rational() * Rational(table_scale, 1);
    const auto c = to_int64(scaled.numerator());
    if (!c) return;
    table.nonzero.push_back({e.i, e.j, e.k, CheckedInt(*c)});
  }
  std::vector<CheckedInt> ints;
  for (const auto& v : entries_) {
    const Rational scaled = v * Rational(entry_scale, 1);
    const auto c = to_int64(scaled.numerator());
    if (!c) return;
    ints.emplace_back(*c);
  }
  int_table_ = std::move(table);
  int_entries_ = std::move(ints);
}

OperatorMatrix FastNijenhuisChecker::matrix(const std::array<std::uint32_t, 9>& index) const {
  OperatorMatrix m;
  for (std::size_t r = 0; r < 9; ++r) m[r / 3][r % 3] = Scalar(entries_[index[r]]);
  return m;
}

bool FastNijenhuisChecker::is_nijenhuis(const std::array<std::uint32_t, 9>& index) const {
  if (int_table_) {
    Matrix3<CheckedInt> n;
    for (std::size_t r = 0; r < 9; ++r) n[r / 3][r % 3] = int_entries_[index[r]];
    try {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          const Vec3<CheckedInt> res = basis_residual(*int_table_, n, i, j);
          if (res[0].v != 0 || res[1].v != 0 || res[2].v != 0) return false;
        }
      }
      return true;
    } catch (const CheckedInt::Overflow&) {
      // fall through to exact arithmetic
    }
  }
  return exact_.is_nijenhuis(matrix(index));
}

ConstraintSystem ConstraintSystem::canonical(std::string algebra, std::optional<Rational> alpha,
                                             std::vector<Poly> polys) {
  ConstraintSystem sys;
  sys.algebra = std::move(algebra);
  sys.alpha = std::move(alpha);
  for (const auto& p : polys) {
    if (!p.is_zero()) sys.polys.push_back(normalize_sign(p));
  }
  std::sort(sys.polys.begin(), sys.polys.end());
  sys.polys.erase(std::unique(sys.polys.begin(), sys.polys.end()), sys.polys.end());
  return sys;
}

ConstraintSystem gen_constraints(const Algebra& alg, const std::optional<Rational>& alpha) {
  const BracketTable<Poly> t = poly_table(alg, alpha);
  Matrix3<Poly> n;
  for (std::size_t r = 0; r < 9; ++r) n[r / 3][r % 3] = Poly::var(kMatrixVars[r]);
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (auto& p : basis_residual(t, n, i, j)) polys.push_back(std::move(p));
    }
  }
  return ConstraintSystem::canonical(alg.id, alpha, std::move(polys));
}

namespace {

// L with p == c * L^k and L of degree one, if such a decomposition exists.
std::optional<Poly> linear_root(const Poly& p) {
  const unsigned k = p.degree();
  if (k == 0) return std::nullopt;
  if (k == 1) return p;
  // The largest variable whose pure k-th power occurs fixes c; the mixed
  // terms v^(k-1)*w and v^(k-1) then determine the other coefficients.
  std::optional<Var> lead;
  for (std::size_t i = kNumVars; i-- > 0;) {
    const Var v = static_cast<Var>(i);
    if (p.degree_in(v) == k) {
      lead = v;
      break;
    }
  }
  if (!lead) return std::nullopt;
  auto coeff_of = [&](const Monomial& m) {
    for (const auto& [mono, c] : p.terms()) {
      if (mono == m) return c;
    }
    return Rational(0);
  };
  const Rational c = coeff_of(Monomial::of(*lead, k));
  const Monomial base = Monomial::of(*lead, k - 1);
  Poly l = Poly::var(*lead);
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const Var w = static_cast<Var>(i);
    if (w == *lead) continue;
    const Rational cw = coeff_of(base * Monomial::of(w));
    if (!cw.is_zero()) l += Poly::var(w).scaled(cw / (c * Rational(static_cast<long>(k))));
  }
  l += Poly(coeff_of(base) / (c * Rational(static_cast<long>(k))));
  if (l.pow(k).scaled(c) != p) return std::nullopt;
  return l;
}

// Replaces v by `value` everywhere in p.
Poly substitute_var(const Poly& p, Var v, const Poly& value) {
  std::array<Poly, kNumVars> values;
  for (std::size_t i = 0; i < kNumVars; ++i) values[i] = Poly::var(static_cast<Var>(i));
  values[static_cast<std::size_t>(v)] = value;
  return p.eval<Poly>(std::span<const Poly, kNumVars>(values));
}

}  // namespace

ConstraintSystem reduce_system(const ConstraintSystem& sys) {
  std::vector<Poly> pending = sys.polys;
  std::vector<Poly> solved;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i].is_constant()) continue;
      const auto root = linear_root(pending[i]);
      if (!root) continue;
      // eliminate the greatest variable of L
      const auto& [mono, coeff] = root->leading();
      Var v = Var::k1;
      for (std::size_t j = 0; j < kNumVars; ++j) {
        if (mono.exp[j] == 1) v = static_cast<Var>(j);
      }
      const Poly value = Poly::var(v) - root->scaled(coeff.inverse());
      solved.push_back(*root);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& q : pending) q = substitute_var(q, v, value);
      pending = ConstraintSystem::canonical(sys.algebra, sys.alpha, std::move(pending)).polys;
      changed = true;
      break;
    }
  }
  solved.insert(solved.end(), pending.begin(), pending.end());
  return ConstraintSystem::canonical(sys.algebra, sys.alpha, std::move(solved));
}

GridSpec GridSpec::range(long lo, long hi) {
  GridSpec g;
  for (long v = lo; v <= hi; ++v) g.values.emplace_back(v);
  g.text = std::to_string(lo) + ".." + std::to_string(hi);
  return g;
}

GridSpec GridSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const Rational lo = Rational::parse(s.substr(0, dots));
    const Rational hi = Rational::parse(s.substr(dots + 2));
    if (!lo.is_integer() || !hi.is_integer() || lo > hi) throw ParseError("grid range needs integers lo <= hi", 0);
    GridSpec g = range(lo.numerator().get_si(), hi.numerator().get_si());
    return g;
  }
  GridSpec g;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    g.values.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(g.values.begin(), g.values.end());
  g.values.erase(std::unique(g.values.begin(), g.values.end()), g.values.end());
  for (std::size_t i = 0; i < g.values.size(); ++i) g.text += (i ? "," : "") + g.values[i].str();
  return g;
}

std::uint64_t GridSpec::points(unsigned dims) const {
  std::uint64_t n = 1;
  for (unsigned d = 0; d < dims; ++d) n *= values.size();
  return n;
}

}  // namespace leibniz
