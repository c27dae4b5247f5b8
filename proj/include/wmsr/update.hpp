#pragma once
// The per-node update rule: sorted neighbor lists, extreme-value removal,
// weight policies, and the convex-combination update.

#include <span>
#include <vector>

#include "wmsr/graph.hpp"

namespace wmsr {

// One snapshot of every node's emitted value, indexed by id. Total on the
// node set; entries are finite.
using ValueMap = std::vector<double>;

// Inclusive neighbors of i ordered ascending by (value, id).
std::vector<NodeId> sort_inclusive_neighbors(const Digraph& g, NodeId i,
                                             const ValueMap& vals);

// Outcome of the extreme-removal pass. The three pieces concatenate back to
// the sorted inclusive neighbor list; i itself is always kept, since its own
// value is neither strictly above nor strictly below itself.
struct RemovalRecord {
  std::vector<NodeId> removed_below;
  std::vector<NodeId> kept;
  std::vector<NodeId> removed_above;
};

// Drops up to fault_bound values strictly below i's own from the front of
// the sorted list, and up to fault_bound strictly above it from the back.
// Value comparisons are exact; `sorted_neighbors` must already be ordered by
// (value, id) or the call throws.
RemovalRecord remove_extremes(NodeId i,
                              const std::vector<NodeId>& sorted_neighbors,
                              const ValueMap& vals, int fault_bound);

// 1/|kept| for every kept node.
std::vector<double> uniform_weights(const RemovalRecord& record);

enum class WeightViolation { SizeMismatch, SumNotOne, BelowAlpha };

inline constexpr double weight_sum_tolerance = 1e-12;

// Empty iff the weights conform over the kept set: one weight per kept node,
// each at least alpha, summing to 1 within weight_sum_tolerance.
std::vector<WeightViolation> check_weight_policy(std::span<const double> weights,
                                                 const RemovalRecord& record,
                                                 double alpha);

struct WeightPolicy {
  enum class Rule { Uniform, Fixed };
  Rule rule = Rule::Uniform;
  double alpha = 0.5;                 // certified lower bound, in (0,1)
  std::vector<double> fixed_weights;  // Rule::Fixed only, aligned with kept

  // Uniform weights, certified by alpha = 1/(max in-degree + 1). An edgeless
  // graph would certify alpha = 1, which the open interval (0,1) forbids, so
  // it gets 1/2 instead (any bound below the lone self-weight of 1 works).
  static WeightPolicy uniform_for(const Digraph& g);

  // Explicitly supplied weights, for records whose kept size matches.
  static WeightPolicy fixed(std::vector<double> weights, double alpha);

  std::vector<double> weights_for(const RemovalRecord& record) const;
};

// The convex combination over the kept set. Throws when the policy's weights
// violate the update conditions for this record. Uniform policies evaluate
// as a plain mean, so a kept set holding k copies of the same integer value
// reproduces that value bit-exactly.
double wmsr_update(NodeId i, const RemovalRecord& record, const ValueMap& vals,
                   const WeightPolicy& policy);

// One node's recorded update inputs: what got removed, what weights applied.
struct NodeUpdate {
  RemovalRecord removal;
  std::vector<double> weights;
};

// Full conforming pipeline for one node: sort, remove extremes, weigh,
// combine. Fills `record` when given.
double conforming_update(const Digraph& g, const ValueMap& snapshot, NodeId i,
                         int fault_bound, const WeightPolicy& policy,
                         NodeUpdate* record = nullptr);

}  // namespace wmsr
