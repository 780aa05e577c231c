#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/poly.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

template <typename R>
using Vec3 = std::array<R, 3>;

enum class CompareOp { Lt, Le, Gt, Ge, Ne };

std::string_view compare_op_symbol(CompareOp op);

/// `alpha <op> bound`.
struct AlphaCondition {
  CompareOp op;
  Rational bound;

  bool holds(const Rational& alpha) const;
  std::string str() const;
  /// Parses "alpha <= 1/4" and friends; nullopt if the text is not of that shape.
  static std::optional<AlphaCondition> parse(std::string_view text);

  friend bool operator==(const AlphaCondition&, const AlphaCondition&) = default;
};

/// [e_i, e_j] = sum_k c(i, j, k) e_k, basis (e, f, g) = (0, 1, 2). Entries are
/// polynomials in alpha only.
struct StructureConstants {
  std::size_t dim = 3;
  std::vector<Poly> c = std::vector<Poly>(27);

  const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  Poly& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

struct Algebra {
  std::string id;
  StructureConstants sc;
  std::vector<AlphaCondition> validity;

  bool parametric() const;
  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// Throws InvalidAlpha unless alpha is present exactly when the algebra is
/// parametric and satisfies its validity conditions.
void check_alpha(const Algebra& alg, const std::optional<Rational>& alpha);

/// Sparse bracket over a coefficient ring R (Scalar, Poly, checked integers...).
template <typename R>
struct BracketTable {
  struct Entry {
    std::uint8_t i, j, k;
    R c;
  };
  std::vector<Entry> nonzero;

  /// [x, y] for coordinate vectors.
  Vec3<R> bracket(const Vec3<R>& x, const Vec3<R>& y) const {
    Vec3<R> out{R(0), R(0), R(0)};
    for (const auto& e : nonzero) out[e.k] += x[e.i] * y[e.j] * e.c;
    return out;
  }
  /// [x, e_j]
  Vec3<R> bracket_right_basis(const Vec3<R>& x, std::size_t j) const {
    Vec3<R> out{R(0), R(0), R(0)};
    for (const auto& e : nonzero) {
      if (e.j == j) out[e.k] += x[e.i] * e.c;
    }
    return out;
  }
  /// [e_i, y]
  Vec3<R> bracket_left_basis(std::size_t i, const Vec3<R>& y) const {
    Vec3<R> out{R(0), R(0), R(0)};
    for (const auto& e : nonzero) {
      if (e.i == i) out[e.k] += y[e.j] * e.c;
    }
    return out;
  }
  /// [e_i, e_j]
  Vec3<R> bracket_basis(std::size_t i, std::size_t j) const {
    Vec3<R> out{R(0), R(0), R(0)};
    for (const auto& e : nonzero) {
      if (e.i == i && e.j == j) out[e.k] += e.c;
    }
    return out;
  }
};

/// Table whose coefficients are the structure constants mapped through `lift`
/// (zero images are dropped).
template <typename R, typename Lift>
BracketTable<R> make_table(const StructureConstants& sc, Lift lift) {
  BracketTable<R> t;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (sc.at(i, j, k).is_zero()) continue;
        R c = lift(sc.at(i, j, k));
        if (c.is_zero()) continue;
        t.nonzero.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                             static_cast<std::uint8_t>(k), std::move(c)});
      }
    }
  }
  return t;
}

/// Structure constants evaluated at alpha (validated with check_alpha).
BracketTable<Scalar> scalar_table(const Algebra& alg, const std::optional<Rational>& alpha);
/// Structure constants as polynomials; alpha substituted when given.
BracketTable<Poly> poly_table(const Algebra& alg, const std::optional<Rational>& alpha = std::nullopt);

/// Bilinear bracket of coordinate vectors.
Vec3<Scalar> bracket(const Algebra& alg, const Vec3<Scalar>& x, const Vec3<Scalar>& y,
                     const std::optional<Rational>& alpha = std::nullopt);

/// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]] as polynomials in alpha.
Vec3<Poly> leibniz_defect(const Algebra& alg, std::size_t i, std::size_t j, std::size_t k);

using Triple = std::array<std::size_t, 3>;

/// All basis triples with nonzero defect; empty means the identity holds
/// identically in alpha.
std::vector<Triple> validate_leibniz(const Algebra& alg);

/// The thirteen three-dimensional algebras A1..A13.
const std::vector<Algebra>& catalog();

/// Lookup by label ("A7"); throws std::out_of_range for unknown labels.
const Algebra& algebra_by_id(std::string_view id);

/// Algebra from a multiplication table given as expression strings,
/// table[i][j] = coordinates of [e_i, e_j].
Algebra make_algebra(std::string id, const std::array<std::array<std::array<std::string_view, 3>, 3>, 3>& table,
                     std::vector<AlphaCondition> validity = {});

}  // namespace leibniz
