#include "wmsr/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wmsr {

namespace {

ValueMap step_with_records(const Scenario& sc, const ValueMap& snapshot, int t,
                           std::vector<std::optional<NodeUpdate>>* records) {
  const int n = sc.graph.node_count();
  ValueMap next(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    if (sc.assignment.is_adversary(i)) {
      next[i] = adversary_value(sc.programs.at(i), t + 1, i);
    } else if (records) {
      NodeUpdate rec;
      next[i] = conforming_update(sc.graph, snapshot, i, sc.fault_bound,
                                  sc.policy, &rec);
      (*records)[i] = std::move(rec);
    } else {
      next[i] = conforming_update(sc.graph, snapshot, i, sc.fault_bound,
                                  sc.policy);
    }
  }
  return next;
}

}  // namespace

void validate_scenario(const Scenario& sc) {
  const int n = sc.graph.node_count();
  if (sc.fault_bound < 0) {
    throw std::invalid_argument("scenario fault bound must be nonnegative");
  }
  if (static_cast<int>(sc.assignment.flags.size()) != n) {
    throw std::invalid_argument("adversary assignment must cover every node");
  }
  if (sc.assignment.fault_bound != sc.fault_bound) {
    throw std::invalid_argument(
        "assignment and scenario disagree on the fault bound");
  }
  if (auto violation = validate_assignment(sc.assignment)) {
    throw std::invalid_argument(*violation);
  }
  if (sc.assignment.adversary_count() == n) {
    throw std::invalid_argument(
        "scenario needs at least one normal node for the envelope");
  }
  for (NodeId i = 0; i < n; ++i) {
    const bool flagged = sc.assignment.flags[i];
    const bool programmed = sc.programs.count(i) > 0;
    if (flagged && !programmed) {
      throw std::invalid_argument("adversary node " + std::to_string(i) +
                                  " has no malicious program");
    }
    if (!flagged && programmed) {
      throw std::invalid_argument("normal node " + std::to_string(i) +
                                  " must not carry a malicious program");
    }
  }
  if (static_cast<int>(sc.init.size()) != n) {
    throw std::invalid_argument("init must assign a value to every node");
  }
  for (double v : sc.init) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("init values must be finite");
    }
  }
  if (!(sc.policy.alpha > 0.0 && sc.policy.alpha < 1.0)) {
    throw std::invalid_argument("weight lower bound alpha must lie in (0, 1)");
  }
  if (sc.horizon < 0) {
    throw std::invalid_argument("horizon must be nonnegative");
  }
}

ValueMap step(const Scenario& sc, const ValueMap& snapshot, int t) {
  validate_scenario(sc);
  if (snapshot.size() != static_cast<std::size_t>(sc.graph.node_count())) {
    throw std::invalid_argument("snapshot must cover every node");
  }
  if (t < 0) throw std::invalid_argument("step index must be nonnegative");
  return step_with_records(sc, snapshot, t, nullptr);
}

RunResult run(const Scenario& sc) {
  validate_scenario(sc);
  const int n = sc.graph.node_count();

  RunResult out;
  out.trace.values.reserve(sc.horizon + 1);
  out.trace.values.push_back(sc.init);
  out.trace.updates.reserve(sc.horizon);
  for (int t = 0; t < sc.horizon; ++t) {
    out.trace.updates.emplace_back(n);
    out.trace.values.push_back(step_with_records(
        sc, out.trace.values.back(), t, &out.trace.updates.back()));
  }

  out.envelope.mins.reserve(sc.horizon + 1);
  out.envelope.maxs.reserve(sc.horizon + 1);
  for (const ValueMap& snap : out.trace.values) {
    double lo = 0.0, hi = 0.0;
    bool seen = false;
    for (NodeId i = 0; i < n; ++i) {
      if (sc.assignment.is_adversary(i)) continue;
      if (!seen) {
        lo = hi = snap[i];
        seen = true;
      } else {
        lo = std::min(lo, snap[i]);
        hi = std::max(hi, snap[i]);
      }
    }
    out.envelope.mins.push_back(lo);
    out.envelope.maxs.push_back(hi);
  }
  return out;
}

std::vector<SafetyViolation> check_safety(const Trace& trace,
                                          const Envelope& envelope,
                                          const AdversaryAssignment& assignment) {
  std::vector<SafetyViolation> out;
  if (trace.values.empty()) return out;
  const int n = static_cast<int>(trace.values[0].size());
  const int steps = static_cast<int>(trace.values.size()) - 1;
  for (int t = 0; t < steps; ++t) {
    const double lo = envelope.mins[t];
    const double hi = envelope.maxs[t];
    for (NodeId i = 0; i < n; ++i) {
      if (assignment.is_adversary(i)) continue;
      const double v = trace.values[t + 1][i];
      if (v < lo - envelope_slack || v > hi + envelope_slack) {
        out.push_back({i, t, v, lo, hi});
      }
    }
  }
  return out;
}

std::vector<ValidityViolation> check_validity(const Envelope& envelope) {
  std::vector<ValidityViolation> out;
  if (envelope.mins.empty()) return out;
  const double lo0 = envelope.mins[0];
  const double hi0 = envelope.maxs[0];
  for (std::size_t t = 0; t < envelope.mins.size(); ++t) {
    if (envelope.mins[t] < lo0 - envelope_slack) {
      out.push_back({static_cast<int>(t), envelope.mins[t], lo0, false});
    }
    if (envelope.maxs[t] > hi0 + envelope_slack) {
      out.push_back({static_cast<int>(t), envelope.maxs[t], hi0, true});
    }
  }
  return out;
}

bool envelope_is_monotone(const Envelope& envelope, double slack) {
  for (std::size_t t = 1; t < envelope.mins.size(); ++t) {
    if (envelope.maxs[t] > envelope.maxs[t - 1] + slack) return false;
    if (envelope.mins[t] < envelope.mins[t - 1] - slack) return false;
  }
  return true;
}

GapDiagnostics gap_diagnostics(const Envelope& envelope, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("gap tolerance must be positive");
  GapDiagnostics d;
  d.gaps.reserve(envelope.mins.size());
  for (std::size_t t = 0; t < envelope.mins.size(); ++t) {
    d.gaps.push_back(envelope.maxs[t] - envelope.mins[t]);
  }
  // Converged means the gap dips below tol and stays there to the horizon.
  int t = static_cast<int>(d.gaps.size());
  while (t > 0 && d.gaps[t - 1] < tol) --t;
  if (t < static_cast<int>(d.gaps.size())) {
    d.converged = true;
    d.t_converged = t;
  }
  return d;
}

}  // namespace wmsr
