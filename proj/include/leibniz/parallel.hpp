#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace leibniz {

/// Splits [0, total) into `jobs` contiguous chunks, runs fn(begin, end) on
/// each (in parallel when jobs > 1) and returns the per-chunk results in
/// chunk order. Results therefore do not depend on the worker count as long
/// as fn's output depends only on its range.
template <typename Fn>
auto parallel_chunks(std::uint64_t total, unsigned jobs, Fn fn) {
  using Result = decltype(fn(std::uint64_t{0}, std::uint64_t{0}));
  jobs = std::max(1U, jobs);
  if (total < jobs) jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
  std::vector<Result> results(jobs);
  const std::uint64_t step = total / jobs;
  auto bounds = [&](unsigned w) {
    const std::uint64_t begin = step * w;
    const std::uint64_t end = w + 1 == jobs ? total : begin + step;
    return std::pair{begin, end};
  };
  if (jobs == 1) {
    results[0] = fn(std::uint64_t{0}, total);
    return results;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        const auto [begin, end] = bounds(w);
        results[w] = fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Decodes a linear index into 9 digits base n, most significant first.
inline std::array<std::uint32_t, 9> decode_index(std::uint64_t index, std::uint32_t n) {
  std::array<std::uint32_t, 9> digits{};
  for (std::size_t d = 9; d-- > 0;) {
    digits[d] = static_cast<std::uint32_t>(index % n);
    index /= n;
  }
  return digits;
}

}  // namespace leibniz
