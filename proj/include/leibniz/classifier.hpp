#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/family.hpp"
#include "leibniz/nijenhuis.hpp"

namespace leibniz {

struct Match {
  FamilyId family;
  Binding binding;
  friend bool operator==(const Match&, const Match&) = default;
};

struct Classification {
  bool nijenhuis = false;
  /// Every family the matrix belongs to, in catalog order. Empty when the
  /// matrix is not a Nijenhuis operator.
  std::vector<Match> matches;
};

/// Membership by slot readback: parameters are read from their slots, the
/// family is re-instantiated and compared entrywise. Side conditions and
/// alpha ranges are checked by instantiate.
Classification classify(const Algebra& alg, const OperatorMatrix& n, const std::optional<Rational>& alpha);

/// All Nijenhuis matrices with entries in `grid`, in enumeration order
/// (row-major entries, most significant first). Independent of `jobs`.
std::vector<OperatorMatrix> grid_search(const Algebra& alg, const GridSpec& grid,
                                        const std::optional<Rational>& alpha, unsigned jobs = 1);

struct GridReport {
  std::string algebra;
  std::optional<Rational> alpha;
  std::string entries;
  std::uint64_t total = 0;
  std::uint64_t found = 0;
  std::vector<OperatorMatrix> unclassified;
  /// Number of found matrices matched by each family ("2.1/2" -> count).
  std::map<std::string, std::uint64_t> family_hits;

  friend bool operator==(const GridReport&, const GridReport&) = default;
};

GridReport completeness_report(const Algebra& alg, const GridSpec& grid, const std::optional<Rational>& alpha,
                               unsigned jobs = 1);

struct FuzzFailure {
  FamilyId family;
  std::string detail;
};

struct FuzzResult {
  std::uint64_t samples = 0;
  std::vector<FuzzFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Random valid bindings per family: rationals in [-10, 10], side conditions
/// enforced by rejection, alpha drawn from the family's admissible range
/// (often chosen so that s is rational, sometimes on a boundary). Each sample
/// is instantiated, checked exactly and classified; the originating family
/// must come back with the original binding.
FuzzResult fuzz_roundtrip(std::uint64_t seed, std::uint64_t samples_per_family, unsigned jobs = 1);

/// "r00,r01,r02;r10,r11,r12;r20,r21,r22".
std::string matrix_to_string(const OperatorMatrix& n);
/// Entries are Scalar literals ("1/2", "1 + 2*sqrt(5)"). Throws ParseError.
OperatorMatrix parse_matrix(std::string_view text);

}  // namespace leibniz
