#pragma once
// Seeded builders for random graphs, adversary programs, and whole scenarios.
// Shared by the sufficiency sweep and the test suites.

#include "wmsr/rng.hpp"
#include "wmsr/sim.hpp"

namespace wmsr {

// Each ordered pair (j, i), j != i, becomes an edge with probability
// edge_prob, in a fixed iteration order.
Digraph random_digraph(int node_count, double edge_prob, Rng&);

std::vector<NodeId> random_distinct_nodes(int node_count, int how_many, Rng&);

MaliciousProgram random_program(Rng&);

// Uniform-policy scenario on the given graph: adversary count drawn from
// [0, min(fault_bound, n-1)] so at least one normal node remains, random
// programs on the adversaries, init uniform in [0, 1].
Scenario random_scenario(const Digraph&, int fault_bound, int horizon, Rng&);

}  // namespace wmsr
