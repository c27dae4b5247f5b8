#pragma once
// Brute-force (r,s)-robustness decision, written against raw edge lists with
// no code shared with the library. Walks every ordered pair of nonempty
// disjoint subsets; quadratic in 2^n, fine for the n <= 7 used in tests.

#include <utility>
#include <vector>

namespace oracle {

inline bool is_r_s_robust(int n,
                          const std::vector<std::pair<int, int>>& edges,
                          int r, int s) {
  std::vector<std::vector<int>> in_lists(n);
  for (const auto& [from, to] : edges) in_lists[to].push_back(from);

  const auto xi_count = [&](unsigned mask) {
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      int outside = 0;
      for (int j : in_lists[i]) {
        if (!(mask >> j & 1u)) ++outside;
      }
      if (outside >= r) ++count;
    }
    return count;
  };
  const auto popcount = [](unsigned mask) {
    int bits = 0;
    for (; mask; mask &= mask - 1) ++bits;
    return bits;
  };

  const unsigned all = (n >= 32) ? ~0u : (1u << n) - 1u;
  for (unsigned s1 = 1; s1 <= all; ++s1) {
    for (unsigned s2 = 1; s2 <= all; ++s2) {
      if (s1 & s2) continue;
      const int c1 = xi_count(s1);
      const int c2 = xi_count(s2);
      if (c1 == popcount(s1)) continue;
      if (c2 == popcount(s2)) continue;
      if (c1 + c2 >= s) continue;
      return false;
    }
  }
  return true;
}

}  // namespace oracle
