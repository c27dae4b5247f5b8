#pragma once
// Top-level checks that tie robustness to run behavior: a sampled sufficiency
// sweep over robust graphs, the pinned-adversary divergence construction for
// non-robust graphs, and the combined report.

#include <cstdint>

#include "wmsr/bounds.hpp"

namespace wmsr {

struct CounterexampleScenario {
  Scenario scenario;
  RobustnessWitness witness;
  NodeSet pinned_zero;  // adversaries held at 0: outside-influenced members of s1
  NodeSet pinned_one;   // adversaries held at 1: outside-influenced members of s2
};

// The divergence construction for a failing pair at r = s = fault_bound + 1:
// s1 starts at 0, s2 at 1, everyone else at 1/2, and the outside-influenced
// members of each set become adversaries pinned to their set's value. The
// None verdict caps the adversary count at fault_bound and leaves at least
// one normal node on each side. Throws if the witness does not actually
// defeat all three conditions on this graph at those parameters.
CounterexampleScenario build_counterexample(const Digraph& g, int fault_bound,
                                            const RobustnessWitness& witness,
                                            int horizon = 100);

struct NecessityResult {
  bool applicable = false;  // graph is non-robust at (F+1, F+1)
  // Bit-exact divergence: every normal member of s1 held exactly 0 and every
  // normal member of s2 exactly 1 at every recorded step.
  bool diverged = false;
  std::optional<RobustnessWitness> witness;
  Trace trace;
  Envelope envelope;
};
NecessityResult verify_necessity(const Digraph& g, int fault_bound,
                                 int horizon,
                                 int cap = default_robustness_cap);

struct SweepTrial {
  std::uint64_t seed = 0;
  int adversary_count = 0;
  bool converged = false;
  std::optional<int> t_converged;
  double final_gap = 0;
  std::size_t safety_violations = 0, validity_violations = 0;
  bool envelope_monotone = false;
};

struct SweepReport {
  bool applicable = false;  // graph is robust at (F+1, F+1)
  bool passed = false;      // every trial converged with clean safety/validity
  std::vector<SweepTrial> trials;
};

// Samples the universal quantifier over adversary sets, programs, and inits
// with seeded randomness; evidence, not proof. Trial k runs on a seed derived
// from (seed, k), so results do not depend on `jobs`.
SweepReport verify_sufficiency_sweep(const Digraph& g, int fault_bound,
                                     int trials, int horizon, double tol,
                                     std::uint64_t seed,
                                     int cap = default_robustness_cap,
                                     int jobs = 1);

struct TheoremReport {
  int node_count = 0, fault_bound = 0;
  bool robust = false;
  std::optional<RobustnessWitness> witness;
  std::optional<SweepReport> sufficiency;    // robust branch: sampled evidence
  std::optional<NecessityResult> necessity;  // non-robust branch
  bool consistent = false;
  int trials = 0, horizon = 0;
  double tol = 0;
  std::uint64_t seed = 0;
};

// Decides (F+1, F+1)-robustness once, then exercises whichever direction
// applies. consistent means: robust graphs swept clean, non-robust graphs
// produced a diverging counterexample.
TheoremReport theorem_report(const Digraph& g, int fault_bound, int trials,
                             int horizon, double tol, std::uint64_t seed,
                             int cap = default_robustness_cap, int jobs = 1);

}  // namespace wmsr
