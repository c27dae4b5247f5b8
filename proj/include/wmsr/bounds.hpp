#pragma once
// Executable pieces of the convergence argument: the epsilon schedule, value
// level sets with their disjointness and shrinking-count induction, and the
// per-step contraction inequality.

#include <optional>

#include "wmsr/sim.hpp"

namespace wmsr {

struct EpsilonSchedule {
  double alpha = 0, eps0 = 0, eps = 0;
  int steps = 0;               // number of recursion steps N
  std::vector<double> values;  // eps_0 .. eps_N
};

// The raw recursion eps_l = alpha * eps_{l-1} - (1 - alpha) * eps, with no
// admissibility gate. Closed form: eps_l = alpha^l * (eps0 + eps) - eps.
std::vector<double> epsilon_recursion(double alpha, double eps0, double eps,
                                      int steps);

// Largest admissible eps for a schedule of the given length:
// alpha^N / (1 - alpha^N) * eps0. eps below this bound is algebraically
// equivalent to eps_N > 0.
double epsilon_admissible_bound(double alpha, double eps0, int steps);

// Validates alpha in (0,1), eps0 > 0, steps >= 1, and 0 < eps under the
// admissible bound (the error message names the bound), then materializes
// the schedule.
EpsilonSchedule epsilon_schedule(double alpha, double eps0, double eps,
                                 int steps);

struct LevelSets {
  NodeSet upper;  // { i : x_i > a_max - eps }
  NodeSet lower;  // { i : x_i < a_min + eps }
  double a_max = 0, a_min = 0, eps = 0;
};

// Strict-inequality membership over all nodes, adversaries included.
LevelSets level_sets(const ValueMap& snapshot, double a_max, double a_min,
                     double eps);

// Direct set-disjointness check; guaranteed to hold whenever the thresholds
// separate, i.e. a_max - eps > a_min + eps.
bool check_disjoint(const LevelSets&);

inline constexpr double contraction_tolerance = 1e-12;

struct ContractionCheck {
  bool applicable = false;  // preconditions held
  bool holds = false;       // update <= (1-alpha)*max_bound + alpha*low_value
  double update = 0, bound = 0;
};

// Preconditions: every kept value <= max_bound, at least one kept value
// <= low_value, and the policy's weights conform over the record. When they
// hold, the update cannot exceed (1-alpha)*max_bound + alpha*low_value
// (within contraction_tolerance).
ContractionCheck contraction_check(NodeId i, const RemovalRecord&,
                                   const ValueMap&, const WeightPolicy&,
                                   double max_bound, double low_value);

struct ShrinkReport {
  bool ok = false;
  std::optional<int> first_empty;  // first l where either count hits zero
  std::vector<int> upper_counts, lower_counts;  // normal-node counts per l
};

// Tracks |upper level set ∩ normal| and |lower ∩ normal| for l = 0..steps,
// probing snapshot t_probe + l with eps_l. While the thresholds separate
// (a_max - eps_l > a_min + eps_l) and both counts are positive, neither may
// grow and one must strictly shrink each step; under those conditions some
// count must empty by l = steps. When the thresholds never separate the
// requirement is vacuous and the report is ok.
ShrinkReport shrinking_counts(const Trace&, double a_max, double a_min,
                              const EpsilonSchedule&, int t_probe,
                              const AdversaryAssignment&);

// Smallest t with maxs[t] < a_max + eps and mins[t] > a_min - eps, or
// nullopt when the envelope never gets that close.
std::optional<int> select_probe_time(const Envelope&, double a_max,
                                     double a_min, double eps);

}  // namespace wmsr
