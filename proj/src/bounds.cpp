#include "wmsr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wmsr {

std::vector<double> epsilon_recursion(double alpha, double eps0, double eps,
                                      int steps) {
  if (steps < 0) throw std::invalid_argument("schedule length must be nonnegative");
  std::vector<double> values;
  values.reserve(steps + 1);
  values.push_back(eps0);
  for (int l = 1; l <= steps; ++l) {
    values.push_back(alpha * values.back() - (1.0 - alpha) * eps);
  }
  return values;
}

double epsilon_admissible_bound(double alpha, double eps0, int steps) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (!(eps0 > 0.0)) throw std::invalid_argument("eps0 must be positive");
  if (steps < 1) throw std::invalid_argument("schedule length must be at least 1");
  const double a_n = std::pow(alpha, steps);
  return a_n / (1.0 - a_n) * eps0;
}

EpsilonSchedule epsilon_schedule(double alpha, double eps0, double eps,
                                 int steps) {
  const double bound = epsilon_admissible_bound(alpha, eps0, steps);
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(eps < bound)) {
    throw std::invalid_argument(
        "eps = " + std::to_string(eps) +
        " is not admissible: it must stay below alpha^N/(1-alpha^N) * eps0 = " +
        std::to_string(bound) + " or the schedule cannot stay positive");
  }
  EpsilonSchedule sched;
  sched.alpha = alpha;
  sched.eps0 = eps0;
  sched.eps = eps;
  sched.steps = steps;
  sched.values = epsilon_recursion(alpha, eps0, eps, steps);
  return sched;
}

LevelSets level_sets(const ValueMap& snapshot, double a_max, double a_min,
                     double eps) {
  LevelSets ls;
  ls.a_max = a_max;
  ls.a_min = a_min;
  ls.eps = eps;
  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    if (snapshot[i] > a_max - eps) ls.upper.insert(static_cast<NodeId>(i));
    if (snapshot[i] < a_min + eps) ls.lower.insert(static_cast<NodeId>(i));
  }
  return ls;
}

bool check_disjoint(const LevelSets& ls) {
  for (NodeId i : ls.upper) {
    if (ls.lower.count(i)) return false;
  }
  return true;
}

ContractionCheck contraction_check(NodeId i, const RemovalRecord& record,
                                   const ValueMap& vals,
                                   const WeightPolicy& policy,
                                   double max_bound, double low_value) {
  ContractionCheck out;
  if (record.kept.empty()) return out;
  bool all_at_most_max = true;
  bool one_at_most_low = false;
  for (NodeId j : record.kept) {
    if (j < 0 || j >= static_cast<int>(vals.size())) {
      throw std::invalid_argument("contraction_check: kept node has no value");
    }
    if (!(vals[j] <= max_bound)) all_at_most_max = false;
    if (vals[j] <= low_value) one_at_most_low = true;
  }
  const std::vector<double> weights = policy.weights_for(record);
  if (!check_weight_policy(weights, record, policy.alpha).empty()) return out;
  if (!all_at_most_max || !one_at_most_low) return out;

  out.applicable = true;
  out.update = wmsr_update(i, record, vals, policy);
  out.bound = (1.0 - policy.alpha) * max_bound + policy.alpha * low_value;
  out.holds = out.update <= out.bound + contraction_tolerance;
  return out;
}

ShrinkReport shrinking_counts(const Trace& trace, double a_max, double a_min,
                              const EpsilonSchedule& sched, int t_probe,
                              const AdversaryAssignment& assignment) {
  const int n_steps = sched.steps;
  if (t_probe < 0 ||
      t_probe + n_steps >= static_cast<int>(trace.values.size())) {
    throw std::invalid_argument(
        "shrinking_counts: trace does not cover the probe window [t, t+N]");
  }

  ShrinkReport rep;
  for (int l = 0; l <= n_steps; ++l) {
    const LevelSets ls =
        level_sets(trace.values[t_probe + l], a_max, a_min, sched.values[l]);
    int upper = 0, lower = 0;
    for (NodeId i : ls.upper) {
      if (!assignment.is_adversary(i)) ++upper;
    }
    for (NodeId i : ls.lower) {
      if (!assignment.is_adversary(i)) ++lower;
    }
    rep.upper_counts.push_back(upper);
    rep.lower_counts.push_back(lower);
  }

  for (int l = 0; l <= n_steps; ++l) {
    if (rep.upper_counts[l] == 0 || rep.lower_counts[l] == 0) {
      rep.first_empty = l;
      break;
    }
  }

  // The shrink requirement only binds while the two thresholds actually
  // separate the sets; outside that premise the induction says nothing.
  const auto separated = [&](int l) {
    return a_max - sched.values[l] > a_min + sched.values[l];
  };
  bool conditions_ok = true;
  bool induction_applied = false;
  for (int l = 0; l <= n_steps; ++l) {
    if (separated(l) && rep.upper_counts[l] > 0 && rep.lower_counts[l] > 0) {
      induction_applied = true;
    }
  }
  for (int l = 1; l <= n_steps; ++l) {
    if (!separated(l)) continue;
    if (rep.upper_counts[l] <= 0 || rep.lower_counts[l] <= 0) continue;
    const bool no_growth = rep.upper_counts[l] <= rep.upper_counts[l - 1] &&
                           rep.lower_counts[l] <= rep.lower_counts[l - 1];
    const bool one_shrinks = rep.upper_counts[l] < rep.upper_counts[l - 1] ||
                             rep.lower_counts[l] < rep.lower_counts[l - 1];
    if (!no_growth || !one_shrinks) conditions_ok = false;
  }
  rep.ok = conditions_ok && (rep.first_empty.has_value() || !induction_applied);
  return rep;
}

std::optional<int> select_probe_time(const Envelope& envelope, double a_max,
                                     double a_min, double eps) {
  for (std::size_t t = 0; t < envelope.mins.size(); ++t) {
    if (envelope.maxs[t] < a_max + eps && envelope.mins[t] > a_min - eps) {
      return static_cast<int>(t);
    }
  }
  return std::nullopt;
}

}  // namespace wmsr
