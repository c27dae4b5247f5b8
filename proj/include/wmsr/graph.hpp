#pragma once
// Directed-graph model, neighbor queries, and the exact (r,s)-robustness
// decision with witness extraction.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace wmsr {

// Node ids are dense in [0, n). Id order doubles as the global tie-breaking
// order wherever two nodes carry equal values.
using NodeId = int;
using NodeSet = std::set<NodeId>;

// Immutable directed graph. An edge (j, i) means information flows j -> i:
// node i reads node j's value. Self-loops are rejected; self-influence enters
// through the inclusive neighbor set J_i = V_i + {i}, never through an edge.
class Digraph {
 public:
  Digraph(int node_count, std::vector<std::pair<NodeId, NodeId>> edges);

  int node_count() const { return node_count_; }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

  // In-neighbors of i, ascending by id.
  const std::vector<NodeId>& in_neighbors_of(NodeId i) const;
  int in_degree(NodeId i) const;
  int max_in_degree() const;
  bool has_edge(NodeId from, NodeId to) const;

 private:
  int node_count_ = 0;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::vector<NodeId>> in_adj_;
};

NodeSet in_neighbors(const Digraph& g, NodeId i);
NodeSet inclusive_neighbors(const Digraph& g, NodeId i);

// Members of `s` that have at least `r` in-neighbors outside `s`.
NodeSet outside_influenced_subset(const Digraph& g, const NodeSet& s, int r);

// Which of the three robustness conditions a pair of sets satisfies first:
//   S1Covered      every member of s1 has >= r in-neighbors outside s1
//   S2Covered      likewise for s2
//   JointThreshold the two outside-influenced subsets together reach size s
//   None           the pair defeats all three, i.e. it is a counterexample
enum class RobustnessVerdict { S1Covered, S2Covered, JointThreshold, None };

struct RobustnessWitness {
  NodeSet s1, s2;
  NodeSet influenced1, influenced2;  // outside-influenced members of s1 / s2
  int r = 0, s = 0;
  RobustnessVerdict verdict = RobustnessVerdict::None;
};

// Evaluates the three conditions for one concrete pair of nonempty, disjoint
// node sets. Throws if the sets are empty, overlap, or leave the graph.
RobustnessVerdict evaluate_pair(const Digraph& g, const NodeSet& s1,
                                const NodeSet& s2, int r, int s);

// The decision walks all 3^n set-pair assignments, so graphs above the cap
// are rejected outright rather than approximated.
inline constexpr int default_robustness_cap = 12;

// First failing pair in canonical order, or nullopt when the graph is
// (r,s)-robust. Canonical order: assignments are base-3 numerals with node 0
// in the least significant position (0 = unassigned, 1 = s1, 2 = s2), counted
// upward; orientations whose lowest assigned node sits in s2 are mirrors of
// an earlier assignment and are skipped.
std::optional<RobustnessWitness> find_non_robust_witness(
    const Digraph& g, int r, int s, int cap = default_robustness_cap);

struct RobustnessResult {
  bool robust = false;
  std::optional<RobustnessWitness> witness;  // a failing pair when not robust
};

RobustnessResult is_r_s_robust(const Digraph& g, int r, int s,
                               int cap = default_robustness_cap);

}  // namespace wmsr
