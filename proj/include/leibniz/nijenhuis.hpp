#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/poly.hpp"
#include "leibniz/rational_fn.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

template <typename R>
using Matrix3 = std::array<std::array<R, 3>, 3>;

/// Row i holds the coordinates of N(e_i): row 0 = N(e), row 1 = N(f), row 2 = N(g).
using OperatorMatrix = Matrix3<Scalar>;
using SymOperator = Matrix3<RationalFn>;

/// The operator with entry (i, j) equal to the (i, j)-th of k1..p3.
SymOperator generic_operator();

/// N(x) for a coordinate vector x.
template <typename R>
Vec3<R> apply_operator(const Matrix3<R>& n, const Vec3<R>& x) {
  Vec3<R> out{R(0), R(0), R(0)};
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) out[j] += x[i] * n[i][j];
  }
  return out;
}

/// [Nx,Ny] + N^2[x,y] - N[Nx,y] - N[x,Ny] for x = e_i, y = e_j.
template <typename R>
Vec3<R> basis_residual(const BracketTable<R>& t, const Matrix3<R>& n, std::size_t i, std::size_t j) {
  const Vec3<R>& nx = n[i];
  const Vec3<R>& ny = n[j];
  Vec3<R> r = t.bracket(nx, ny);
  const Vec3<R> n2 = apply_operator(n, apply_operator(n, t.bracket_basis(i, j)));
  const Vec3<R> a = apply_operator(n, t.bracket_right_basis(nx, j));
  const Vec3<R> b = apply_operator(n, t.bracket_left_basis(i, ny));
  for (std::size_t k = 0; k < 3; ++k) {
    r[k] += n2[k];
    r[k] -= a[k];
    r[k] -= b[k];
  }
  return r;
}

/// Residual for arbitrary coordinate vectors.
template <typename R>
Vec3<R> residual(const BracketTable<R>& t, const Matrix3<R>& n, const Vec3<R>& x, const Vec3<R>& y) {
  const Vec3<R> nx = apply_operator(n, x);
  const Vec3<R> ny = apply_operator(n, y);
  Vec3<R> r = t.bracket(nx, ny);
  const Vec3<R> n2 = apply_operator(n, apply_operator(n, t.bracket(x, y)));
  const Vec3<R> a = apply_operator(n, t.bracket(nx, y));
  const Vec3<R> b = apply_operator(n, t.bracket(x, ny));
  for (std::size_t k = 0; k < 3; ++k) {
    r[k] += n2[k];
    r[k] -= a[k];
    r[k] -= b[k];
  }
  return r;
}

Vec3<Scalar> residual(const Algebra& alg, const OperatorMatrix& n, const Vec3<Scalar>& x, const Vec3<Scalar>& y,
                      const std::optional<Rational>& alpha = std::nullopt);

struct BasisPair {
  std::size_t i;
  std::size_t j;
  friend bool operator==(const BasisPair&, const BasisPair&) = default;
};

/// Algebra instantiated at a fixed alpha, for repeated exact checks.
class NijenhuisChecker {
 public:
  NijenhuisChecker(const Algebra& alg, const std::optional<Rational>& alpha);

  /// Basis pairs with nonzero residual; empty means N is a Nijenhuis operator.
  std::vector<BasisPair> failing_pairs(const OperatorMatrix& n) const;
  bool is_nijenhuis(const OperatorMatrix& n) const;

  const BracketTable<Scalar>& table() const { return table_; }

 private:
  BracketTable<Scalar> table_;
};

std::vector<BasisPair> nijenhuis_check(const Algebra& alg, const OperatorMatrix& n,
                                       const std::optional<Rational>& alpha = std::nullopt);

/// 64-bit integer that throws Overflow instead of wrapping.
struct CheckedInt {
  struct Overflow {};

  std::int64_t v = 0;

  CheckedInt() = default;
  CheckedInt(std::int64_t value) : v(value) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return v == 0; }
  CheckedInt& operator+=(CheckedInt rhs) {
    if (__builtin_add_overflow(v, rhs.v, &v)) throw Overflow{};
    return *this;
  }
  CheckedInt& operator-=(CheckedInt rhs) {
    if (__builtin_sub_overflow(v, rhs.v, &v)) throw Overflow{};
    return *this;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return CheckedInt(r);
  }
};

/// Integer-scaled checker for matrices with entries drawn from a fixed finite
/// set of rationals.
///
/// The residual is linear in the bracket and homogeneous of degree two in N,
/// so scaling the structure constants and the entries by common denominators
/// preserves its zero set. Overflow falls back to exact arithmetic.
class FastNijenhuisChecker {
 public:
  FastNijenhuisChecker(const Algebra& alg, const std::optional<Rational>& alpha, const std::vector<Rational>& entries);

  /// Matrix given as indices into the entry set, row-major.
  bool is_nijenhuis(const std::array<std::uint32_t, 9>& index) const;
  OperatorMatrix matrix(const std::array<std::uint32_t, 9>& index) const;

 private:
  NijenhuisChecker exact_;
  std::vector<Rational> entries_;
  std::optional<BracketTable<CheckedInt>> int_table_;
  std::vector<CheckedInt> int_entries_;
};

/// Polynomial system whose common zero set is a set of operators.
struct ConstraintSystem {
  std::string algebra;
  /// nullopt: symbolic in alpha.
  std::optional<Rational> alpha;
  /// Sign-normalized, deduplicated, sorted ascending.
  std::vector<Poly> polys;

  /// Drops zeros, applies normalize_sign, dedupes and sorts.
  static ConstraintSystem canonical(std::string algebra, std::optional<Rational> alpha, std::vector<Poly> polys);

  friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) = default;
};

/// Residual of the generic operator over all nine basis pairs.
ConstraintSystem gen_constraints(const Algebra& alg, const std::optional<Rational>& alpha = std::nullopt);

/// Equivalent system with linear factors exposed: any member equal to c*L^k
/// for a linear L is replaced by L, and L's leading variable is eliminated
/// from the rest. The zero set is unchanged over every field.
ConstraintSystem reduce_system(const ConstraintSystem& sys);

/// Hand transcription of the published if-and-only-if system for the algebra.
ConstraintSystem paper_system(const Algebra& alg);

/// Published systems that disagree with the residual, with the text as
/// printed. Used to pin the corrections made in paper_system.
struct UncorrectedSystem {
  std::string algebra;
  std::vector<std::string> polys;
  std::string correction;
};
const std::vector<UncorrectedSystem>& uncorrected_paper_systems();

struct GridPoint {
  std::array<Rational, 9> values;
  std::optional<Rational> alpha;
};

/// Finite entry set for grid enumeration, e.g. "-2..2" or "0,1,1/2".
struct GridSpec {
  std::vector<Rational> values;  // ascending, distinct
  std::string text;

  static GridSpec parse(std::string_view text);
  static GridSpec range(long lo, long hi);
  std::uint64_t points(unsigned dims = 9) const;
};

/// First point (in canonical enumeration order) of grid^9 x alphas where
/// exactly one of the two systems vanishes; nullopt when the zero sets agree.
/// An empty alpha list means neither system may use alpha.
std::optional<GridPoint> systems_equivalent_on_grid(const ConstraintSystem& a, const ConstraintSystem& b,
                                                    const GridSpec& grid, const std::vector<Rational>& alphas,
                                                    unsigned jobs = 1);

}  // namespace leibniz
