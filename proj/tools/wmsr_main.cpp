// Command-line front end: robustness checks, scenario simulation,
// counterexample construction, and the combined two-direction verdict.
//
// Exit codes: 0 success (check-robust: robust; verify: consistent),
// 1 negative verdict (non-robust / inconsistent), 2 usage or runtime error,
// 3 counterexample requested on a robust graph.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wmsr/json_io.hpp"

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    open_out(out_path) << j.dump(2) << "\n";
  }
}

int run_check_robust(const std::string& graph_path, int r, int s, int cap) {
  const wmsr::Digraph g = wmsr::load_graph_file(graph_path);
  const wmsr::RobustnessResult res = wmsr::is_r_s_robust(g, r, s, cap);
  json verdict{{"n", g.node_count()}, {"r", r}, {"s", s}, {"robust", res.robust}};
  verdict["witness"] =
      res.witness ? wmsr::witness_to_json(*res.witness) : json(nullptr);
  std::cout << verdict.dump(2) << "\n";
  return res.robust ? 0 : 1;
}

int run_simulate(const std::string& scenario_path,
                 std::optional<int> horizon_override, double tol,
                 const std::string& out_path) {
  wmsr::Scenario sc = wmsr::load_scenario_file(scenario_path);
  if (horizon_override) {
    if (*horizon_override < 1) {
      throw std::runtime_error("horizon must be at least 1");
    }
    sc.horizon = *horizon_override;
  }
  const wmsr::RunResult res = wmsr::run(sc);

  std::ofstream file;
  if (!out_path.empty()) file = open_out(out_path);
  std::ostream& trace_out = out_path.empty() ? std::cout : file;
  for (int t = 0; t <= sc.horizon; ++t) {
    trace_out << wmsr::trace_line(t, res.trace.values[t], res.envelope.mins[t],
                                  res.envelope.maxs[t])
                     .dump()
              << "\n";
  }

  const auto safety = wmsr::check_safety(res.trace, res.envelope, sc.assignment);
  const auto validity = wmsr::check_validity(res.envelope);
  const wmsr::GapDiagnostics gd = wmsr::gap_diagnostics(res.envelope, tol);

  json flagged = json::array();
  for (wmsr::NodeId i = 0; i < sc.graph.node_count(); ++i) {
    for (int t = 0; t < sc.horizon; ++t) {
      if (wmsr::is_malicious_at(res.trace, sc.graph, i, t, sc.fault_bound,
                                sc.policy)) {
        flagged.push_back(i);
        break;
      }
    }
  }

  json summary{{"n", sc.graph.node_count()},
               {"F", sc.fault_bound},
               {"horizon", sc.horizon},
               {"tol", tol},
               {"converged", gd.converged},
               {"t_converged",
                gd.t_converged ? json(*gd.t_converged) : json(nullptr)},
               {"final_gap", gd.gaps.back()},
               {"safety_violations", safety.size()},
               {"validity_violations", validity.size()},
               {"envelope_monotone", wmsr::envelope_is_monotone(res.envelope)},
               {"flagged", std::move(flagged)}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_counterexample(const std::string& graph_path, int fault_bound,
                       int horizon, int cap, const std::string& out_path) {
  const wmsr::Digraph g = wmsr::load_graph_file(graph_path);
  const auto witness =
      wmsr::find_non_robust_witness(g, fault_bound + 1, fault_bound + 1, cap);
  if (!witness) {
    std::cerr << "graph is (" << fault_bound + 1 << ", " << fault_bound + 1
              << ")-robust; no counterexample exists\n";
    return 3;
  }
  const wmsr::CounterexampleScenario cex =
      wmsr::build_counterexample(g, fault_bound, *witness, horizon);
  emit(wmsr::counterexample_to_json(cex), out_path);
  return 0;
}

int run_verify(const std::string& graph_path, int fault_bound, int trials,
               int horizon, double tol, std::uint64_t seed, int cap, int jobs,
               const std::string& out_path) {
  const wmsr::Digraph g = wmsr::load_graph_file(graph_path);
  const wmsr::TheoremReport rep =
      wmsr::theorem_report(g, fault_bound, trials, horizon, tol, seed, cap, jobs);
  const json j = wmsr::theorem_report_to_json(rep);
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) open_out(out_path) << j.dump(2) << "\n";
  return rep.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "W-MSR resilient-consensus laboratory: simulate runs under F-total "
      "malicious nodes, decide (r,s)-robustness with witnesses, and check "
      "both directions of the consensus criterion."};
  app.require_subcommand(1);

  std::string graph_path, scenario_path, out_path;
  int r = 1, s = 1;
  int fault_bound = 0;
  int cap = wmsr::default_robustness_cap;
  int trials = 20;
  int horizon = 200;
  int cex_horizon = 100;
  std::optional<int> horizon_override;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  int jobs = 1;

  CLI::App* check = app.add_subcommand(
      "check-robust", "Decide (r,s)-robustness; prints a witness if not");
  check->add_option("--graph", graph_path, "graph JSON file")->required();
  check->add_option("--r", r, "in-neighbor threshold r")->required();
  check->add_option("--s", s, "joint count threshold s")->required();
  check->add_option("--cap", cap, "largest node count the decision accepts")
      ->envname("WMSR_CAP");

  CLI::App* sim = app.add_subcommand(
      "simulate", "Run a scenario; trace as JSON lines plus a summary");
  sim->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  sim->add_option("--horizon", horizon_override, "override the file's horizon");
  sim->add_option("--tol", tol, "convergence gap tolerance");
  sim->add_option("--out", out_path, "write the trace here instead of stdout");

  CLI::App* cex = app.add_subcommand(
      "counterexample",
      "Emit a pinned-adversary scenario that defeats consensus");
  cex->add_option("--graph", graph_path, "graph JSON file")->required();
  cex->add_option("--F", fault_bound, "fault bound F")->required();
  cex->add_option("--horizon", cex_horizon, "scenario horizon");
  cex->add_option("--cap", cap, "largest node count the decision accepts")
      ->envname("WMSR_CAP");
  cex->add_option("--out", out_path, "write the scenario here");

  CLI::App* verify = app.add_subcommand(
      "verify", "Decide robustness at (F+1, F+1), then check the matching "
                "consensus direction");
  verify->add_option("--graph", graph_path, "graph JSON file")->required();
  verify->add_option("--F", fault_bound, "fault bound F")->required();
  verify->add_option("--trials", trials, "sweep trials on the robust branch");
  verify->add_option("--horizon", horizon, "steps per run");
  verify->add_option("--tol", tol, "convergence gap tolerance");
  verify->add_option("--seed", seed, "sweep seed");
  verify->add_option("--cap", cap, "largest node count the decision accepts")
      ->envname("WMSR_CAP");
  verify->add_option("--jobs", jobs, "worker threads for the sweep");
  verify->add_option("--out", out_path, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check_robust(graph_path, r, s, cap);
    if (*sim) return run_simulate(scenario_path, horizon_override, tol, out_path);
    if (*cex) {
      return run_counterexample(graph_path, fault_bound, cex_horizon, cap,
                                out_path);
    }
    return run_verify(graph_path, fault_bound, trials, horizon, tol, seed, cap,
                      jobs, out_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
