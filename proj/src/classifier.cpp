#include "leibniz/classifier.hpp"

#include <algorithm>
#include <random>

#include "leibniz/error.hpp"
#include "leibniz/parallel.hpp"

namespace leibniz {

Classification classify(const Algebra& alg, const OperatorMatrix& n, const std::optional<Rational>& alpha) {
  Classification result;
  result.nijenhuis = NijenhuisChecker(alg, alpha).is_nijenhuis(n);
  if (!result.nijenhuis) return result;
  for (const Family* f : families_of(alg.id)) {
    Binding binding = read_slots(*f, n);
    try {
      if (instantiate(*f, binding, alpha) == n) result.matches.push_back({f->id, std::move(binding)});
    } catch (const SideConditionViolated&) {
    } catch (const RadicalNegative&) {
    } catch (const DenominatorVanishes&) {
    } catch (const ContextError&) {
      // entries over a different quadratic field cannot belong to this family
    }
  }
  return result;
}

std::vector<OperatorMatrix> grid_search(const Algebra& alg, const GridSpec& grid,
                                        const std::optional<Rational>& alpha, unsigned jobs) {
  const FastNijenhuisChecker checker(alg, alpha, grid.values);
  const auto n = static_cast<std::uint32_t>(grid.values.size());
  const auto chunks = parallel_chunks(grid.points(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hits;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (checker.is_nijenhuis(decode_index(idx, n))) hits.push_back(idx);
    }
    return hits;
  });
  std::vector<OperatorMatrix> out;
  for (const auto& chunk : chunks) {
    for (std::uint64_t idx : chunk) out.push_back(checker.matrix(decode_index(idx, n)));
  }
  return out;
}

GridReport completeness_report(const Algebra& alg, const GridSpec& grid, const std::optional<Rational>& alpha,
                               unsigned jobs) {
  GridReport report;
  report.algebra = alg.id;
  report.alpha = alpha;
  report.entries = grid.text;
  report.total = grid.points();
  const std::vector<OperatorMatrix> found = grid_search(alg, grid, alpha, jobs);
  report.found = found.size();

  struct Partial {
    std::vector<OperatorMatrix> unclassified;
    std::map<std::string, std::uint64_t> hits;
  };
  const auto parts = parallel_chunks(found.size(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    Partial p;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Classification c = classify(alg, found[i], alpha);
      if (c.matches.empty()) p.unclassified.push_back(found[i]);
      for (const auto& m : c.matches) ++p.hits[m.family.str()];
    }
    return p;
  });
  for (const auto& p : parts) {
    report.unclassified.insert(report.unclassified.end(), p.unclassified.begin(), p.unclassified.end());
    for (const auto& [id, count] : p.hits) report.family_hits[id] += count;
  }
  return report;
}

namespace {

constexpr int kMaxTries = 2000;

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> den_dist(1, 4);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-bound * den, bound * den);
  return Rational(num_dist(rng), den);
}

bool alpha_admissible(const Algebra& alg, const Family& f, const Rational& alpha) {
  for (const auto& c : alg.validity) {
    if (!c.holds(alpha)) return false;
  }
  for (const auto& c : f.conditions) {
    const auto* ac = std::get_if<AlphaCondition>(&c);
    if (ac != nullptr && !ac->holds(alpha)) return false;
  }
  if (f.radical && f.radical->radicand_at(alpha).sign() < 0) return false;
  return true;
}

std::optional<Rational> sample_alpha(std::mt19937_64& rng, const Algebra& alg, const Family& f) {
  std::vector<Rational> boundaries;
  for (const auto& c : f.conditions) {
    if (const auto* ac = std::get_if<AlphaCondition>(&c)) boundaries.push_back(ac->bound);
  }
  const auto rule = radical_rule_for(alg.id);
  if (rule) boundaries.push_back(-rule->c0 / rule->c1);
  std::uniform_int_distribution<int> strategy(0, 9);
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    Rational alpha;
    const int pick = strategy(rng);
    if (pick == 0 && !boundaries.empty()) {
      std::uniform_int_distribution<std::size_t> which(0, boundaries.size() - 1);
      alpha = boundaries[which(rng)];
    } else if (pick <= 5 && rule) {
      // s = r rational: alpha = (r^2 - c0) / c1
      Rational r = random_rational(rng, 5).abs();
      alpha = (r * r - rule->c0) / rule->c1;
    } else {
      alpha = random_rational(rng, 10);
    }
    if (alpha_admissible(alg, f, alpha)) return alpha;
  }
  return std::nullopt;
}

std::vector<FuzzFailure> fuzz_family(const Family& f, std::size_t index, std::uint64_t seed, std::uint64_t samples) {
  std::vector<FuzzFailure> failures;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> zero_pick(0, 7);
  const Algebra& alg = algebra_by_id(f.algebra);
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    std::optional<Rational> alpha;
    Binding binding;
    std::optional<OperatorMatrix> n;
    for (int attempt = 0; attempt < kMaxTries && !n; ++attempt) {
      if (alg.parametric()) {
        alpha = sample_alpha(rng, alg, f);
        if (!alpha) break;
      }
      binding.clear();
      for (Var v : f.params) binding[v] = zero_pick(rng) == 0 ? Rational(0) : random_rational(rng, 10);
      try {
        n = instantiate(f, binding, alpha);
      } catch (const SideConditionViolated&) {
      } catch (const DenominatorVanishes&) {
      }
    }
    if (!n) {
      failures.push_back({f.id, "no valid binding found"});
      return failures;
    }
    auto describe = [&] {
      std::string text = "matrix " + matrix_to_string(*n);
      if (alpha) text += " at alpha = " + alpha->str();
      return text;
    };
    if (!nijenhuis_check(alg, *n, alpha).empty()) {
      failures.push_back({f.id, "not a Nijenhuis operator: " + describe()});
      continue;
    }
    const Classification c = classify(alg, *n, alpha);
    const bool found = std::any_of(c.matches.begin(), c.matches.end(), [&](const Match& m) {
      return m.family == f.id && m.binding == binding;
    });
    if (!found) failures.push_back({f.id, "not classified back: " + describe()});
  }
  return failures;
}

}  // namespace

FuzzResult fuzz_roundtrip(std::uint64_t seed, std::uint64_t samples_per_family, unsigned jobs) {
  const auto& families = family_catalog();
  const auto parts = parallel_chunks(families.size(), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<FuzzFailure> failures;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto f = fuzz_family(families[i], i, seed, samples_per_family);
      failures.insert(failures.end(), f.begin(), f.end());
    }
    return failures;
  });
  FuzzResult result;
  result.samples = samples_per_family * families.size();
  for (const auto& p : parts) result.failures.insert(result.failures.end(), p.begin(), p.end());
  return result;
}

std::string matrix_to_string(const OperatorMatrix& n) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < 3; ++j) {
      if (j) out += ',';
      out += n[i][j].str();
    }
  }
  return out;
}

OperatorMatrix parse_matrix(std::string_view text) {
  OperatorMatrix n;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const char sep = j < 2 ? ',' : (i < 2 ? ';' : '\0');
      const std::size_t end = sep ? text.find(sep, pos) : text.size();
      if (end == std::string_view::npos) throw ParseError("matrix needs 3 rows of 3 entries", pos);
      if (sep == '\0' && text.substr(pos).find_first_of(",;") != std::string_view::npos) {
        throw ParseError("matrix needs 3 rows of 3 entries", pos);
      }
      n[i][j] = Scalar::parse(text.substr(pos, end - pos));
      pos = end + 1;
    }
  }
  return n;
}

}  // namespace leibniz
