#include "wmsr/update.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wmsr {

namespace {

void require_total(const Digraph& g, const ValueMap& vals) {
  if (vals.size() != static_cast<std::size_t>(g.node_count())) {
    throw std::invalid_argument("value map covers " +
                                std::to_string(vals.size()) + " nodes, graph has " +
                                std::to_string(g.node_count()));
  }
}

// (value, id) ascending; ids are unique, so this is a strict total order.
bool value_id_less(const ValueMap& vals, NodeId a, NodeId b) {
  if (vals[a] != vals[b]) return vals[a] < vals[b];
  return a < b;
}

}  // namespace

std::vector<NodeId> sort_inclusive_neighbors(const Digraph& g, NodeId i,
                                             const ValueMap& vals) {
  require_total(g, vals);
  if (i < 0 || i >= g.node_count()) {
    throw std::invalid_argument("sort_inclusive_neighbors: node id " +
                                std::to_string(i) + " outside the graph");
  }
  std::vector<NodeId> list = g.in_neighbors_of(i);
  list.push_back(i);
  std::sort(list.begin(), list.end(),
            [&](NodeId a, NodeId b) { return value_id_less(vals, a, b); });
  return list;
}

RemovalRecord remove_extremes(NodeId i,
                              const std::vector<NodeId>& sorted_neighbors,
                              const ValueMap& vals, int fault_bound) {
  if (fault_bound < 0) {
    throw std::invalid_argument("fault bound must be nonnegative");
  }
  bool self_present = false;
  for (std::size_t k = 0; k < sorted_neighbors.size(); ++k) {
    const NodeId j = sorted_neighbors[k];
    if (j < 0 || j >= static_cast<int>(vals.size())) {
      throw std::invalid_argument("remove_extremes: node id " +
                                  std::to_string(j) + " has no value");
    }
    if (j == i) self_present = true;
    // Prefix/suffix trimming below is only sound on a sorted list.
    if (k > 0 && !value_id_less(vals, sorted_neighbors[k - 1], j)) {
      throw std::invalid_argument(
          "remove_extremes: input list is not sorted by (value, id)");
    }
  }
  if (!self_present) {
    throw std::invalid_argument(
        "remove_extremes: node must appear in its own inclusive neighbor list");
  }

  const double pivot = vals[i];
  const int size = static_cast<int>(sorted_neighbors.size());
  int below = 0;
  while (below < size && vals[sorted_neighbors[below]] < pivot) ++below;
  int above = 0;
  while (above < size && vals[sorted_neighbors[size - 1 - above]] > pivot) ++above;

  // Strictly-smaller values form a prefix and strictly-greater ones a suffix;
  // each side loses at most fault_bound entries, all of them if fewer exist.
  const int drop_front = std::min(below, fault_bound);
  const int drop_back = std::min(above, fault_bound);

  RemovalRecord rec;
  rec.removed_below.assign(sorted_neighbors.begin(),
                           sorted_neighbors.begin() + drop_front);
  rec.kept.assign(sorted_neighbors.begin() + drop_front,
                  sorted_neighbors.end() - drop_back);
  rec.removed_above.assign(sorted_neighbors.end() - drop_back,
                           sorted_neighbors.end());
  return rec;
}

std::vector<double> uniform_weights(const RemovalRecord& record) {
  if (record.kept.empty()) {
    throw std::invalid_argument("uniform_weights: kept set is empty");
  }
  return std::vector<double>(record.kept.size(),
                             1.0 / static_cast<double>(record.kept.size()));
}

std::vector<WeightViolation> check_weight_policy(std::span<const double> weights,
                                                 const RemovalRecord& record,
                                                 double alpha) {
  std::vector<WeightViolation> out;
  if (weights.size() != record.kept.size()) {
    out.push_back(WeightViolation::SizeMismatch);
    return out;
  }
  double sum = 0.0;
  bool below = false;
  for (double w : weights) {
    sum += w;
    if (w < alpha) below = true;
  }
  if (std::abs(sum - 1.0) > weight_sum_tolerance) {
    out.push_back(WeightViolation::SumNotOne);
  }
  if (below) out.push_back(WeightViolation::BelowAlpha);
  return out;
}

WeightPolicy WeightPolicy::uniform_for(const Digraph& g) {
  WeightPolicy p;
  p.rule = Rule::Uniform;
  p.alpha = 1.0 / (std::max(g.max_in_degree(), 1) + 1);
  return p;
}

WeightPolicy WeightPolicy::fixed(std::vector<double> weights, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("weight lower bound alpha must lie in (0, 1)");
  }
  WeightPolicy p;
  p.rule = Rule::Fixed;
  p.alpha = alpha;
  p.fixed_weights = std::move(weights);
  return p;
}

std::vector<double> WeightPolicy::weights_for(const RemovalRecord& record) const {
  if (rule == Rule::Uniform) return uniform_weights(record);
  return fixed_weights;
}

double wmsr_update(NodeId i, const RemovalRecord& record, const ValueMap& vals,
                   const WeightPolicy& policy) {
  if (std::find(record.kept.begin(), record.kept.end(), i) == record.kept.end()) {
    throw std::invalid_argument(
        "wmsr_update: node is missing from its own kept set");
  }
  const std::vector<double> weights = policy.weights_for(record);
  if (!check_weight_policy(weights, record, policy.alpha).empty()) {
    throw std::invalid_argument(
        "wmsr_update: weights violate the update conditions over the kept set");
  }
  if (policy.rule == WeightPolicy::Rule::Uniform) {
    // Mean form: summing first keeps states built from identical integers
    // exact, where k terms of value/k each would round.
    double sum = 0.0;
    for (NodeId j : record.kept) sum += vals[j];
    return sum / static_cast<double>(record.kept.size());
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < record.kept.size(); ++k) {
    acc += weights[k] * vals[record.kept[k]];
  }
  return acc;
}

double conforming_update(const Digraph& g, const ValueMap& snapshot, NodeId i,
                         int fault_bound, const WeightPolicy& policy,
                         NodeUpdate* record) {
  const std::vector<NodeId> sorted = sort_inclusive_neighbors(g, i, snapshot);
  RemovalRecord removal = remove_extremes(i, sorted, snapshot, fault_bound);
  const double value = wmsr_update(i, removal, snapshot, policy);
  if (record) {
    record->weights = policy.weights_for(removal);
    record->removal = std::move(removal);
  }
  return value;
}

}  // namespace wmsr
