#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eqc/execution.hpp"

namespace eqc::detail {

/// Runs fn(i) for i in [0, count) and keeps the engaged results, ordered by
/// index. The order is independent of thread scheduling. fn must not throw.
template <class T, class Fn>
std::vector<std::pair<std::size_t, T>> collect_indexed(std::size_t count, Execution exec, Fn&& fn) {
  std::vector<std::pair<std::size_t, T>> out;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel if (exec == Execution::Parallel && count > 1)
  {
    std::vector<std::pair<std::size_t, T>> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      std::optional<T> r = fn(static_cast<std::size_t>(i));
      if (r) local.emplace_back(static_cast<std::size_t>(i), std::move(*r));
    }
#pragma omp critical(eqc_collect_indexed)
    for (auto& item : local) out.push_back(std::move(item));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace eqc::detail
