#pragma once
// Synchronous lockstep execution of a scenario: trace recording, the
// normal-node envelope, and the safety / validity / convergence checks.

#include <map>
#include <optional>

#include "wmsr/adversary.hpp"

namespace wmsr {

struct Scenario {
  Digraph graph;
  int fault_bound = 0;
  AdversaryAssignment assignment;
  std::map<NodeId, MaliciousProgram> programs;  // keyed by the flagged nodes
  ValueMap init;
  WeightPolicy policy;
  int horizon = 1;
};

// Throws naming the first broken scenario invariant: assignment covering and
// F-total, programs exactly on the flagged nodes, init total and finite,
// at least one normal node, alpha inside (0,1), horizon nonnegative.
void validate_scenario(const Scenario&);

struct Trace {
  // horizon + 1 snapshots; values[0] is the scenario init.
  std::vector<ValueMap> values;
  // updates[t][i], t < horizon: the record behind values[t+1][i].
  // Empty for adversary nodes, which ignore the update rule.
  std::vector<std::vector<std::optional<NodeUpdate>>> updates;
};

struct Envelope {
  std::vector<double> mins, maxs;  // min / max over normal nodes, per step
};

// One synchronous round: every normal node applies the conforming update to
// the time-t snapshot, every adversary emits its program value for t+1.
ValueMap step(const Scenario&, const ValueMap& snapshot, int t);

struct RunResult {
  Trace trace;
  Envelope envelope;
};
RunResult run(const Scenario&);

// Slack granted on exact envelope bounds to absorb float rounding.
inline constexpr double envelope_slack = 1e-12;

struct SafetyViolation {
  NodeId node = 0;
  int t = 0;  // base step: value is x_node(t+1), bounds are the time-t envelope
  double value = 0, lo = 0, hi = 0;
};
std::vector<SafetyViolation> check_safety(const Trace&, const Envelope&,
                                          const AdversaryAssignment&);

struct ValidityViolation {
  int t = 0;
  double value = 0, bound = 0;
  bool upper = false;  // true: maxs[t] exceeded maxs[0]; false: mins[t] fell under mins[0]
};
std::vector<ValidityViolation> check_validity(const Envelope&);

// maxs non-increasing and mins non-decreasing, within the slack.
bool envelope_is_monotone(const Envelope&, double slack = envelope_slack);

struct GapDiagnostics {
  bool converged = false;
  std::optional<int> t_converged;  // first step from which the gap stays below tol
  std::vector<double> gaps;        // maxs[t] - mins[t]
};
GapDiagnostics gap_diagnostics(const Envelope&, double tol);

}  // namespace wmsr
