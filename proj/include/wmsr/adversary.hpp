#pragma once
// The F-total malicious threat model: adversary assignments, scripted value
// programs, and after-the-fact maliciousness detection.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wmsr/update.hpp"

namespace wmsr {

struct AdversaryAssignment {
  std::vector<bool> flags;  // flags[i]: node i is an adversary
  int fault_bound = 0;      // network-wide cap on the adversary count

  int adversary_count() const;
  bool is_adversary(NodeId i) const {
    return i >= 0 && i < static_cast<int>(flags.size()) && flags[i];
  }
};

// nullopt when the assignment respects the F-total bound, otherwise a
// description of the violation.
std::optional<std::string> validate_assignment(const AdversaryAssignment&);

// A malicious node broadcasts one value per step to all of its out-neighbors;
// these programs script that value as a function of time.
struct ConstantProgram {
  double value = 0.0;
};
struct RampProgram {
  double start = 0.0;
  double slope = 0.0;  // value at t is start + slope * t
};
struct OscillateProgram {
  double center = 0.0;
  double amplitude = 0.0;
  int period = 1;  // steps per full sine cycle
};
struct ScriptProgram {
  std::vector<double> values;  // indexed by t; extended past the end by its last entry
};

using MaliciousProgram =
    std::variant<ConstantProgram, RampProgram, OscillateProgram, ScriptProgram>;

// The value the program emits at step t. `node` is carried for interface
// completeness; none of the current program kinds depend on it.
double adversary_value(const MaliciousProgram& program, int t, NodeId node);

inline constexpr double malicious_tolerance = 1e-9;

struct Trace;

// True iff the recorded x_i(t+1) deviates from the conforming update computed
// from the recorded time-t snapshot by more than malicious_tolerance. Works
// for any node; honest nodes are never flagged because the simulator and the
// detector share the same update path.
bool is_malicious_at(const Trace& trace, const Digraph& g, NodeId i, int t,
                     int fault_bound, const WeightPolicy& policy);

}  // namespace wmsr
