#include "wmsr/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace wmsr {

namespace {

void require_node(const Digraph& g, NodeId i, const char* what) {
  if (i < 0 || i >= g.node_count()) {
    throw std::invalid_argument(std::string(what) + ": node id " +
                                std::to_string(i) + " outside [0, " +
                                std::to_string(g.node_count()) + ")");
  }
}

}  // namespace

Digraph::Digraph(int node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1) {
    throw std::invalid_argument("digraph needs at least one node");
  }
  in_adj_.resize(node_count_);
  for (const auto& [from, to] : edges_) {
    if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_) {
      throw std::invalid_argument("edge (" + std::to_string(from) + ", " +
                                  std::to_string(to) +
                                  ") has an endpoint outside [0, " +
                                  std::to_string(node_count_) + ")");
    }
    if (from == to) {
      throw std::invalid_argument("self-loop at node " + std::to_string(from));
    }
    in_adj_[to].push_back(from);
  }
  for (auto& adj : in_adj_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw std::invalid_argument("duplicate edge in edge list");
    }
  }
}

const std::vector<NodeId>& Digraph::in_neighbors_of(NodeId i) const {
  require_node(*this, i, "in_neighbors_of");
  return in_adj_[i];
}

int Digraph::in_degree(NodeId i) const {
  return static_cast<int>(in_neighbors_of(i).size());
}

int Digraph::max_in_degree() const {
  std::size_t best = 0;
  for (const auto& adj : in_adj_) best = std::max(best, adj.size());
  return static_cast<int>(best);
}

bool Digraph::has_edge(NodeId from, NodeId to) const {
  require_node(*this, from, "has_edge");
  require_node(*this, to, "has_edge");
  const auto& adj = in_adj_[to];
  return std::binary_search(adj.begin(), adj.end(), from);
}

NodeSet in_neighbors(const Digraph& g, NodeId i) {
  const auto& adj = g.in_neighbors_of(i);
  return NodeSet(adj.begin(), adj.end());
}

NodeSet inclusive_neighbors(const Digraph& g, NodeId i) {
  NodeSet out = in_neighbors(g, i);
  out.insert(i);
  return out;
}

NodeSet outside_influenced_subset(const Digraph& g, const NodeSet& s, int r) {
  if (r < 0) throw std::invalid_argument("influence threshold r must be nonnegative");
  for (NodeId i : s) require_node(g, i, "outside_influenced_subset");
  NodeSet result;
  for (NodeId i : s) {
    int outside = 0;
    for (NodeId j : g.in_neighbors_of(i)) {
      if (!s.count(j)) ++outside;
    }
    if (outside >= r) result.insert(i);
  }
  return result;
}

RobustnessVerdict evaluate_pair(const Digraph& g, const NodeSet& s1,
                                const NodeSet& s2, int r, int s) {
  if (s1.empty() || s2.empty()) {
    throw std::invalid_argument("both sets of a robustness pair must be nonempty");
  }
  for (NodeId i : s1) {
    if (s2.count(i)) {
      throw std::invalid_argument("robustness pair sets overlap at node " +
                                  std::to_string(i));
    }
  }
  const NodeSet x1 = outside_influenced_subset(g, s1, r);
  const NodeSet x2 = outside_influenced_subset(g, s2, r);
  if (x1.size() == s1.size()) return RobustnessVerdict::S1Covered;
  if (x2.size() == s2.size()) return RobustnessVerdict::S2Covered;
  if (static_cast<int>(x1.size() + x2.size()) >= s) {
    return RobustnessVerdict::JointThreshold;
  }
  return RobustnessVerdict::None;
}

std::optional<RobustnessWitness> find_non_robust_witness(const Digraph& g,
                                                         int r, int s,
                                                         int cap) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("robustness needs at least two nodes");
  if (r < 0) throw std::invalid_argument("robustness parameter r must be nonnegative");
  if (s < 1 || s > n) {
    throw std::invalid_argument("robustness parameter s must lie in [1, n]; got " +
                                std::to_string(s));
  }
  if (cap < 2 || cap > 30) {
    throw std::invalid_argument("robustness cap must lie in [2, 30]");
  }
  if (n > cap) {
    throw std::invalid_argument("graph has " + std::to_string(n) +
                                " nodes, above the enumeration cap " +
                                std::to_string(cap) +
                                " (the decision walks 3^n assignments)");
  }

  std::vector<std::uint32_t> in_mask(n, 0);
  for (const auto& [from, to] : g.edges()) {
    in_mask[to] |= std::uint32_t{1} << from;
  }

  // Base-3 odometer over node assignments, node 0 least significant.
  std::vector<int> digit(n, 0);
  for (;;) {
    int pos = 0;
    while (pos < n && digit[pos] == 2) digit[pos++] = 0;
    if (pos == n) break;  // wrapped: every assignment visited
    ++digit[pos];

    // The conditions are symmetric in (s1, s2), so orientations whose lowest
    // assigned node sits in s2 duplicate an earlier assignment; skip them.
    int first = 0;
    while (digit[first] == 0) ++first;
    if (digit[first] == 2) continue;

    std::uint32_t m1 = 0, m2 = 0;
    for (int i = 0; i < n; ++i) {
      if (digit[i] == 1) {
        m1 |= std::uint32_t{1} << i;
      } else if (digit[i] == 2) {
        m2 |= std::uint32_t{1} << i;
      }
    }
    if (m1 == 0 || m2 == 0) continue;

    const int size1 = std::popcount(m1);
    const int size2 = std::popcount(m2);
    int c1 = 0, c2 = 0;
    for (int i = 0; i < n; ++i) {
      if (m1 >> i & 1) {
        if (std::popcount(in_mask[i] & ~m1) >= r) ++c1;
      } else if (m2 >> i & 1) {
        if (std::popcount(in_mask[i] & ~m2) >= r) ++c2;
      }
    }
    if (c1 == size1 || c2 == size2 || c1 + c2 >= s) continue;

    // A failing pair: rebuild the sets and return it as the witness.
    RobustnessWitness w;
    w.r = r;
    w.s = s;
    w.verdict = RobustnessVerdict::None;
    for (int i = 0; i < n; ++i) {
      if (m1 >> i & 1) w.s1.insert(i);
      if (m2 >> i & 1) w.s2.insert(i);
    }
    w.influenced1 = outside_influenced_subset(g, w.s1, r);
    w.influenced2 = outside_influenced_subset(g, w.s2, r);
    return w;
  }
  return std::nullopt;
}

RobustnessResult is_r_s_robust(const Digraph& g, int r, int s, int cap) {
  RobustnessResult out;
  out.witness = find_non_robust_witness(g, r, s, cap);
  out.robust = !out.witness.has_value();
  return out;
}

}  // namespace wmsr
