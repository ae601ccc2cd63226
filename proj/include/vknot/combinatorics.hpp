#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace vknot {

/// Calls `f(pairs)` for every perfect matching of points 0..2n-1, in a fixed order: the lowest
/// unmatched point is paired with each higher unmatched point in increasing order.
template <class F>
void for_each_matching(int points, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(static_cast<std::size_t>(points), false);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    while (first < points && used[static_cast<std::size_t>(first)]) ++first;
    if (first == points) {
      f(static_cast<const std::vector<std::pair<int, int>>&>(pairs));
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int other = first + 1; other < points; ++other) {
      if (used[static_cast<std::size_t>(other)]) continue;
      used[static_cast<std::size_t>(other)] = true;
      pairs.emplace_back(first, other);
      self(self);
      pairs.pop_back();
      used[static_cast<std::size_t>(other)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec(rec);
}

/// (2n-1)!!, the number of perfect matchings of 2n points.
constexpr std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

/// Calls `f(mask)` for every k-element subset of {0..n-1}, in increasing mask order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
  while (limit == 0 || mask < limit) {
    f(mask);
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    if (r == 0) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace vknot
