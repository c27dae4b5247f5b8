#include "wmsr/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace wmsr {

int Rng::integer(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("Rng::integer: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::real(double lo, double hi) {
  // 53 uniform mantissa bits in [0, 1).
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over seed + stream increments.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Digraph random_digraph(int node_count, double edge_prob, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId from = 0; from < node_count; ++from) {
    for (NodeId to = 0; to < node_count; ++to) {
      if (from == to) continue;
      if (rng.chance(edge_prob)) edges.emplace_back(from, to);
    }
  }
  return Digraph(node_count, std::move(edges));
}

std::vector<NodeId> random_distinct_nodes(int node_count, int how_many,
                                          Rng& rng) {
  if (how_many < 0 || how_many > node_count) {
    throw std::invalid_argument("random_distinct_nodes: bad count");
  }
  std::vector<NodeId> ids(node_count);
  for (int i = 0; i < node_count; ++i) ids[i] = i;
  // Partial Fisher-Yates: the first how_many entries become the sample.
  for (int k = 0; k < how_many; ++k) {
    std::swap(ids[k], ids[rng.integer(k, node_count - 1)]);
  }
  ids.resize(how_many);
  return ids;
}

MaliciousProgram random_program(Rng& rng) {
  switch (rng.integer(0, 3)) {
    case 0:
      return ConstantProgram{rng.real(-1.0, 2.0)};
    case 1:
      return RampProgram{rng.real(-1.0, 2.0), rng.real(-5.0, 5.0)};
    case 2:
      return OscillateProgram{rng.real(0.0, 1.0), rng.real(0.0, 3.0),
                              rng.integer(1, 20)};
    default: {
      ScriptProgram script;
      const int len = rng.integer(1, 10);
      script.values.reserve(len);
      for (int k = 0; k < len; ++k) script.values.push_back(rng.real(-2.0, 3.0));
      return script;
    }
  }
}

Scenario random_scenario(const Digraph& g, int fault_bound, int horizon,
                         Rng& rng) {
  const int n = g.node_count();
  Scenario sc{g, fault_bound, {}, {}, {}, WeightPolicy::uniform_for(g), horizon};
  sc.assignment.flags.assign(n, false);
  sc.assignment.fault_bound = fault_bound;

  const int max_adversaries = std::min(fault_bound, n - 1);
  const int count = max_adversaries > 0 ? rng.integer(0, max_adversaries) : 0;
  for (NodeId i : random_distinct_nodes(n, count, rng)) {
    sc.assignment.flags[i] = true;
    sc.programs.emplace(i, random_program(rng));
  }

  sc.init.resize(n);
  for (NodeId i = 0; i < n; ++i) sc.init[i] = rng.real(0.0, 1.0);
  return sc;
}

}  // namespace wmsr
