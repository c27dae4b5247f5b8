#include "wmsr/adversary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wmsr/sim.hpp"

namespace wmsr {

int AdversaryAssignment::adversary_count() const {
  int count = 0;
  for (bool f : flags) count += f ? 1 : 0;
  return count;
}

std::optional<std::string> validate_assignment(const AdversaryAssignment& a) {
  if (a.fault_bound < 0) return "fault bound must be nonnegative";
  const int count = a.adversary_count();
  if (count > a.fault_bound) {
    return "adversary count " + std::to_string(count) +
           " exceeds the F-total bound F = " + std::to_string(a.fault_bound);
  }
  return std::nullopt;
}

double adversary_value(const MaliciousProgram& program, int t, NodeId node) {
  (void)node;
  if (t < 0) throw std::invalid_argument("adversary_value: t must be nonnegative");
  struct Visitor {
    int t;
    double operator()(const ConstantProgram& p) const { return p.value; }
    double operator()(const RampProgram& p) const { return p.start + p.slope * t; }
    double operator()(const OscillateProgram& p) const {
      if (p.period < 1) {
        throw std::invalid_argument("oscillate program needs period >= 1");
      }
      return p.center +
             p.amplitude * std::sin(2.0 * std::numbers::pi * t / p.period);
    }
    double operator()(const ScriptProgram& p) const {
      if (p.values.empty()) {
        throw std::invalid_argument("script program needs at least one entry");
      }
      const std::size_t idx =
          std::min<std::size_t>(static_cast<std::size_t>(t), p.values.size() - 1);
      return p.values[idx];
    }
  };
  return std::visit(Visitor{t}, program);
}

bool is_malicious_at(const Trace& trace, const Digraph& g, NodeId i, int t,
                     int fault_bound, const WeightPolicy& policy) {
  if (t < 0 || t + 1 >= static_cast<int>(trace.values.size())) {
    throw std::invalid_argument("is_malicious_at: trace lacks steps t and t+1");
  }
  const double conforming =
      conforming_update(g, trace.values[t], i, fault_bound, policy);
  return std::abs(trace.values[t + 1][i] - conforming) > malicious_tolerance;
}

}  // namespace wmsr
