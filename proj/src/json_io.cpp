#include "wmsr/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace wmsr {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::runtime_error(std::string(where) + ": missing field \"" + key +
                             "\"");
  }
  return j.at(key);
}

int require_int(const json& j, const char* key, const char* where) {
  const json& v = require_field(j, key, where);
  if (!v.is_number_integer()) {
    throw std::runtime_error(std::string(where) + ": field \"" + key +
                             "\" must be an integer");
  }
  return v.get<int>();
}

double require_finite(const json& v, const char* what) {
  if (!v.is_number()) {
    throw std::runtime_error(std::string(what) + " must be a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw std::runtime_error(std::string(what) + " must be finite");
  }
  return d;
}

json node_set_to_json(const NodeSet& s) {
  json arr = json::array();
  for (NodeId i : s) arr.push_back(i);
  return arr;
}

const char* verdict_name(RobustnessVerdict v) {
  switch (v) {
    case RobustnessVerdict::S1Covered:
      return "s1_covered";
    case RobustnessVerdict::S2Covered:
      return "s2_covered";
    case RobustnessVerdict::JointThreshold:
      return "joint_threshold";
    default:
      return "none";
  }
}

}  // namespace

json graph_to_json(const Digraph& g) {
  json edges = json::array();
  for (const auto& [from, to] : g.edges()) {
    edges.push_back(json::array({from, to}));
  }
  return json{{"n", g.node_count()}, {"edges", std::move(edges)}};
}

Digraph graph_from_json(const json& j) {
  const int n = require_int(j, "n", "graph");
  const json& edges_json = require_field(j, "edges", "graph");
  if (!edges_json.is_array()) {
    throw std::runtime_error("graph: \"edges\" must be an array");
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edges_json.size());
  for (const json& e : edges_json) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw std::runtime_error("graph: each edge must be a [from, to] pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Digraph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("graph: ") + ex.what());
  }
}

json program_to_json(const MaliciousProgram& program) {
  struct Visitor {
    json operator()(const ConstantProgram& p) const {
      return json{{"kind", "constant"}, {"value", p.value}};
    }
    json operator()(const RampProgram& p) const {
      return json{{"kind", "ramp"}, {"start", p.start}, {"slope", p.slope}};
    }
    json operator()(const OscillateProgram& p) const {
      return json{{"kind", "oscillate"},
                  {"center", p.center},
                  {"amplitude", p.amplitude},
                  {"period", p.period}};
    }
    json operator()(const ScriptProgram& p) const {
      return json{{"kind", "script"}, {"values", p.values}};
    }
  };
  return std::visit(Visitor{}, program);
}

MaliciousProgram program_from_json(const json& j) {
  const json& kind = require_field(j, "kind", "program");
  if (!kind.is_string()) {
    throw std::runtime_error("program: \"kind\" must be a string");
  }
  const std::string k = kind.get<std::string>();
  if (k == "constant") {
    return ConstantProgram{
        require_finite(require_field(j, "value", "program"), "constant value")};
  }
  if (k == "ramp") {
    return RampProgram{
        require_finite(require_field(j, "start", "program"), "ramp start"),
        require_finite(require_field(j, "slope", "program"), "ramp slope")};
  }
  if (k == "oscillate") {
    OscillateProgram p;
    p.center =
        require_finite(require_field(j, "center", "program"), "oscillate center");
    p.amplitude = require_finite(require_field(j, "amplitude", "program"),
                                 "oscillate amplitude");
    p.period = require_int(j, "period", "program");
    if (p.period < 1) {
      throw std::runtime_error("program: oscillate period must be >= 1");
    }
    return p;
  }
  if (k == "script") {
    const json& values = require_field(j, "values", "program");
    if (!values.is_array() || values.empty()) {
      throw std::runtime_error(
          "program: script needs a nonempty \"values\" array");
    }
    ScriptProgram p;
    p.values.reserve(values.size());
    for (const json& v : values) {
      p.values.push_back(require_finite(v, "script entry"));
    }
    return p;
  }
  throw std::runtime_error("program: unknown kind \"" + k + "\"");
}

json scenario_to_json(const Scenario& sc) {
  json adversaries = json::array();
  json programs = json::object();
  for (const auto& [i, program] : sc.programs) {
    adversaries.push_back(i);
    programs[std::to_string(i)] = program_to_json(program);
  }
  json init = json::object();
  for (std::size_t i = 0; i < sc.init.size(); ++i) {
    init[std::to_string(i)] = sc.init[i];
  }
  return json{{"graph", graph_to_json(sc.graph)},
              {"F", sc.fault_bound},
              {"adversaries", std::move(adversaries)},
              {"programs", std::move(programs)},
              {"init", std::move(init)},
              {"policy", "uniform"},
              {"horizon", sc.horizon}};
}

Scenario scenario_from_json(const json& j) {
  Digraph graph = graph_from_json(require_field(j, "graph", "scenario"));
  const int n = graph.node_count();
  const int fault_bound = require_int(j, "F", "scenario");
  const int horizon = require_int(j, "horizon", "scenario");
  if (horizon < 1) {
    throw std::runtime_error("scenario: horizon must be at least 1");
  }

  if (j.contains("policy")) {
    const json& policy = j.at("policy");
    if (!policy.is_string() || policy.get<std::string>() != "uniform") {
      throw std::runtime_error(
          "scenario: \"policy\" must be \"uniform\" (the only selector)");
    }
  }

  Scenario sc{std::move(graph), fault_bound, {}, {}, {}, WeightPolicy{},
              horizon};
  sc.policy = WeightPolicy::uniform_for(sc.graph);
  sc.assignment.flags.assign(n, false);
  sc.assignment.fault_bound = fault_bound;

  const json& adversaries = require_field(j, "adversaries", "scenario");
  if (!adversaries.is_array()) {
    throw std::runtime_error("scenario: \"adversaries\" must be an array");
  }
  for (const json& a : adversaries) {
    if (!a.is_number_integer()) {
      throw std::runtime_error("scenario: adversary ids must be integers");
    }
    const int i = a.get<int>();
    if (i < 0 || i >= n) {
      throw std::runtime_error("scenario: adversary id " + std::to_string(i) +
                               " outside [0, " + std::to_string(n) + ")");
    }
    if (sc.assignment.flags[i]) {
      throw std::runtime_error("scenario: adversary id " + std::to_string(i) +
                               " listed twice");
    }
    sc.assignment.flags[i] = true;
  }

  const json& programs = require_field(j, "programs", "scenario");
  if (!programs.is_object()) {
    throw std::runtime_error("scenario: \"programs\" must be an object");
  }
  for (const auto& [key, value] : programs.items()) {
    int i = 0;
    try {
      i = std::stoi(key);
    } catch (...) {
      throw std::runtime_error("scenario: program key \"" + key +
                               "\" is not a node id");
    }
    if (i < 0 || i >= n || !sc.assignment.flags[i]) {
      throw std::runtime_error("scenario: program for node " + key +
                               " which is not a listed adversary");
    }
    sc.programs.emplace(i, program_from_json(value));
  }
  for (NodeId i = 0; i < n; ++i) {
    if (sc.assignment.flags[i] && !sc.programs.count(i)) {
      throw std::runtime_error("scenario: adversary " + std::to_string(i) +
                               " has no program");
    }
  }

  const json& init = require_field(j, "init", "scenario");
  if (!init.is_object()) {
    throw std::runtime_error("scenario: \"init\" must be an object");
  }
  sc.init.assign(n, 0.0);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : init.items()) {
    int i = 0;
    try {
      i = std::stoi(key);
    } catch (...) {
      throw std::runtime_error("scenario: init key \"" + key +
                               "\" is not a node id");
    }
    if (i < 0 || i >= n) {
      throw std::runtime_error("scenario: init key " + key +
                               " outside [0, " + std::to_string(n) + ")");
    }
    sc.init[i] = require_finite(value, "init value");
    seen[i] = true;
  }
  for (NodeId i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw std::runtime_error("scenario: init missing node " +
                               std::to_string(i));
    }
  }

  try {
    validate_scenario(sc);
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("scenario: ") + ex.what());
  }
  return sc;
}

json witness_to_json(const RobustnessWitness& w) {
  return json{{"s1", node_set_to_json(w.s1)},
              {"s2", node_set_to_json(w.s2)},
              {"influenced1", node_set_to_json(w.influenced1)},
              {"influenced2", node_set_to_json(w.influenced2)},
              {"r", w.r},
              {"s", w.s},
              {"verdict", verdict_name(w.verdict)}};
}

json counterexample_to_json(const CounterexampleScenario& cex) {
  json j = scenario_to_json(cex.scenario);
  j["counterexample"] = json{{"witness", witness_to_json(cex.witness)},
                             {"pinned_zero", node_set_to_json(cex.pinned_zero)},
                             {"pinned_one", node_set_to_json(cex.pinned_one)}};
  return j;
}

json trace_line(int t, const ValueMap& snapshot, double min_normal,
                double max_normal) {
  json x = json::object();
  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    x[std::to_string(i)] = snapshot[i];
  }
  return json{{"t", t}, {"x", std::move(x)}, {"m", min_normal}, {"M", max_normal}};
}

json sweep_report_to_json(const SweepReport& rep) {
  json trials = json::array();
  for (const SweepTrial& t : rep.trials) {
    trials.push_back(json{
        {"seed", t.seed},
        {"adversary_count", t.adversary_count},
        {"converged", t.converged},
        {"t_converged",
         t.t_converged ? json(*t.t_converged) : json(nullptr)},
        {"final_gap", t.final_gap},
        {"safety_violations", t.safety_violations},
        {"validity_violations", t.validity_violations},
        {"envelope_monotone", t.envelope_monotone}});
  }
  return json{{"kind", "sampled evidence"},
              {"applicable", rep.applicable},
              {"passed", rep.passed},
              {"trials", std::move(trials)}};
}

json theorem_report_to_json(const TheoremReport& rep) {
  json j{{"n", rep.node_count},
         {"F", rep.fault_bound},
         {"r", rep.fault_bound + 1},
         {"s", rep.fault_bound + 1},
         {"robust", rep.robust},
         {"consistent", rep.consistent},
         {"params",
          json{{"trials", rep.trials},
               {"horizon", rep.horizon},
               {"tol", rep.tol},
               {"seed", rep.seed}}}};
  j["witness"] = rep.witness ? witness_to_json(*rep.witness) : json(nullptr);
  j["sufficiency"] =
      rep.sufficiency ? sweep_report_to_json(*rep.sufficiency) : json(nullptr);
  if (rep.necessity) {
    const GapDiagnostics gd = gap_diagnostics(rep.necessity->envelope, rep.tol);
    j["necessity"] = json{{"applicable", rep.necessity->applicable},
                          {"diverged", rep.necessity->diverged},
                          {"final_gap", gd.gaps.back()}};
  } else {
    j["necessity"] = json(nullptr);
  }
  return j;
}

namespace {

json load_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(std::string(what) + ": cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string(what) + ": " + path + ": " + ex.what());
  }
  return j;
}

}  // namespace

Digraph load_graph_file(const std::string& path) {
  return graph_from_json(load_json_file(path, "graph file"));
}

Scenario load_scenario_file(const std::string& path) {
  return scenario_from_json(load_json_file(path, "scenario file"));
}

}  // namespace wmsr
