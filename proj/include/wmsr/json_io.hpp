#pragma once
// JSON surfaces: graph and scenario files, program descriptors, witnesses,
// trace lines, and the combined report.

#include <string>

#include <json.hpp>

#include "wmsr/verify.hpp"

namespace wmsr {

nlohmann::json graph_to_json(const Digraph&);
Digraph graph_from_json(const nlohmann::json&);

nlohmann::json program_to_json(const MaliciousProgram&);
MaliciousProgram program_from_json(const nlohmann::json&);

nlohmann::json scenario_to_json(const Scenario&);
Scenario scenario_from_json(const nlohmann::json&);

nlohmann::json witness_to_json(const RobustnessWitness&);

// The scenario object plus a "counterexample" block (witness and pinned
// sets); loaders ignore the extra block, so the output runs as-is.
nlohmann::json counterexample_to_json(const CounterexampleScenario&);

// One line of a JSON-lines trace: t, per-node values, normal envelope.
nlohmann::json trace_line(int t, const ValueMap&, double min_normal,
                          double max_normal);

nlohmann::json sweep_report_to_json(const SweepReport&);
nlohmann::json theorem_report_to_json(const TheoremReport&);

Digraph load_graph_file(const std::string& path);
Scenario load_scenario_file(const std::string& path);

}  // namespace wmsr
