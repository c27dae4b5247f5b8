#include "wmsr/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "wmsr/generators.hpp"

namespace wmsr {

namespace {

// Counterexample run + bit-exact pin check, robustness already decided.
NecessityResult necessity_from_witness(const Digraph& g, int fault_bound,
                                       const RobustnessWitness& witness,
                                       int horizon) {
  NecessityResult out;
  out.applicable = true;
  out.witness = witness;

  const CounterexampleScenario cex =
      build_counterexample(g, fault_bound, witness, horizon);
  RunResult rr = run(cex.scenario);

  bool pinned = true;
  for (const ValueMap& snap : rr.trace.values) {
    for (NodeId i : witness.s1) {
      if (!cex.scenario.assignment.is_adversary(i) && snap[i] != 0.0) {
        pinned = false;
      }
    }
    for (NodeId i : witness.s2) {
      if (!cex.scenario.assignment.is_adversary(i) && snap[i] != 1.0) {
        pinned = false;
      }
    }
  }
  out.diverged = pinned;
  out.trace = std::move(rr.trace);
  out.envelope = std::move(rr.envelope);
  return out;
}

SweepTrial run_one_trial(const Digraph& g, int fault_bound, int horizon,
                         double tol, std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  const Scenario sc = random_scenario(g, fault_bound, horizon, rng);
  const RunResult rr = run(sc);

  SweepTrial trial;
  trial.seed = trial_seed;
  trial.adversary_count = sc.assignment.adversary_count();
  const GapDiagnostics gd = gap_diagnostics(rr.envelope, tol);
  trial.converged = gd.converged;
  trial.t_converged = gd.t_converged;
  trial.final_gap = gd.gaps.back();
  trial.safety_violations =
      check_safety(rr.trace, rr.envelope, sc.assignment).size();
  trial.validity_violations = check_validity(rr.envelope).size();
  trial.envelope_monotone = envelope_is_monotone(rr.envelope);
  return trial;
}

SweepReport sweep_from_robust(const Digraph& g, int fault_bound, int trials,
                              int horizon, double tol, std::uint64_t seed,
                              int jobs) {
  SweepReport rep;
  rep.applicable = true;
  rep.trials.resize(trials);

  const auto work = [&](int begin, int end) {
    for (int k = begin; k < end; ++k) {
      rep.trials[k] = run_one_trial(g, fault_bound, horizon, tol,
                                    Rng::derive(seed, k));
    }
  };
  const int workers = std::max(1, std::min(jobs, trials));
  if (workers == 1) {
    work(0, trials);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  rep.passed = true;
  for (const SweepTrial& t : rep.trials) {
    if (!t.converged || t.safety_violations != 0 || t.validity_violations != 0) {
      rep.passed = false;
    }
  }
  return rep;
}

}  // namespace

CounterexampleScenario build_counterexample(const Digraph& g, int fault_bound,
                                            const RobustnessWitness& witness,
                                            int horizon) {
  if (fault_bound < 0) {
    throw std::invalid_argument("fault bound must be nonnegative");
  }
  const int r = fault_bound + 1;
  if (witness.r != r || witness.s != r) {
    throw std::invalid_argument(
        "witness parameters do not match (F+1, F+1) for this fault bound");
  }
  if (evaluate_pair(g, witness.s1, witness.s2, r, r) != RobustnessVerdict::None) {
    throw std::invalid_argument(
        "witness pair does not defeat all three robustness conditions");
  }

  NodeSet pinned_zero = outside_influenced_subset(g, witness.s1, r);
  NodeSet pinned_one = outside_influenced_subset(g, witness.s2, r);

  const int n = g.node_count();
  Scenario sc{g, fault_bound, {}, {}, {}, WeightPolicy::uniform_for(g), horizon};
  sc.assignment.flags.assign(n, false);
  sc.assignment.fault_bound = fault_bound;
  for (NodeId i : pinned_zero) {
    sc.assignment.flags[i] = true;
    sc.programs.emplace(i, ConstantProgram{0.0});
  }
  for (NodeId i : pinned_one) {
    sc.assignment.flags[i] = true;
    sc.programs.emplace(i, ConstantProgram{1.0});
  }
  sc.init.assign(n, 0.5);
  for (NodeId i : witness.s1) sc.init[i] = 0.0;
  for (NodeId i : witness.s2) sc.init[i] = 1.0;

  // The None verdict keeps the pinned sets strictly inside s1/s2 and their
  // union below F+1, so this must already be a valid F-total scenario.
  validate_scenario(sc);
  return CounterexampleScenario{std::move(sc), witness, std::move(pinned_zero),
                                std::move(pinned_one)};
}

NecessityResult verify_necessity(const Digraph& g, int fault_bound,
                                 int horizon, int cap) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const auto witness =
      find_non_robust_witness(g, fault_bound + 1, fault_bound + 1, cap);
  if (!witness) return {};  // robust: nothing to construct
  return necessity_from_witness(g, fault_bound, *witness, horizon);
}

SweepReport verify_sufficiency_sweep(const Digraph& g, int fault_bound,
                                     int trials, int horizon, double tol,
                                     std::uint64_t seed, int cap, int jobs) {
  if (trials < 1) throw std::invalid_argument("sweep needs at least one trial");
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const RobustnessResult rob =
      is_r_s_robust(g, fault_bound + 1, fault_bound + 1, cap);
  if (!rob.robust) return {};  // not applicable on non-robust graphs
  return sweep_from_robust(g, fault_bound, trials, horizon, tol, seed, jobs);
}

TheoremReport theorem_report(const Digraph& g, int fault_bound, int trials,
                             int horizon, double tol, std::uint64_t seed,
                             int cap, int jobs) {
  if (fault_bound < 0 || fault_bound + 1 > g.node_count()) {
    throw std::invalid_argument(
        "fault bound must satisfy 0 < F + 1 <= node count");
  }
  if (trials < 1) throw std::invalid_argument("report needs at least one trial");
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  TheoremReport rep;
  rep.node_count = g.node_count();
  rep.fault_bound = fault_bound;
  rep.trials = trials;
  rep.horizon = horizon;
  rep.tol = tol;
  rep.seed = seed;

  const RobustnessResult rob =
      is_r_s_robust(g, fault_bound + 1, fault_bound + 1, cap);
  rep.robust = rob.robust;
  rep.witness = rob.witness;
  if (rob.robust) {
    rep.sufficiency =
        sweep_from_robust(g, fault_bound, trials, horizon, tol, seed, jobs);
    rep.consistent = rep.sufficiency->passed;
  } else {
    rep.necessity =
        necessity_from_witness(g, fault_bound, *rob.witness, horizon);
    rep.consistent = rep.necessity->diverged;
  }
  return rep;
}

}  // namespace wmsr
