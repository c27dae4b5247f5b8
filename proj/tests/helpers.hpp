#pragma once
// Small graph builders shared across the suites.

#include <utility>
#include <vector>

#include "wmsr/graph.hpp"

namespace helpers {

inline wmsr::Digraph make_graph(int n,
                                std::vector<std::pair<int, int>> edges) {
  return wmsr::Digraph(n, std::move(edges));
}

// Every ordered pair (i, j), i != j.
inline wmsr::Digraph complete_bidirectional(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return wmsr::Digraph(n, std::move(edges));
}

// i -> (i + 1) mod n.
inline wmsr::Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return wmsr::Digraph(n, std::move(edges));
}

inline wmsr::Digraph edgeless(int n) { return wmsr::Digraph(n, {}); }

}  // namespace helpers
