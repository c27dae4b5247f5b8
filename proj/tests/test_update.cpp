#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "helpers.hpp"
#include "wmsr/generators.hpp"
#include "wmsr/update.hpp"

using namespace wmsr;
using helpers::complete_bidirectional;
using helpers::edgeless;
using helpers::make_graph;

TEST_CASE("sorting breaks value ties by id") {
  const Digraph g = complete_bidirectional(3);
  const ValueMap vals{0.3, 0.3, 0.1};
  CHECK(sort_inclusive_neighbors(g, 0, vals) == std::vector<NodeId>{2, 0, 1});
  CHECK(sort_inclusive_neighbors(g, 2, vals) == std::vector<NodeId>{2, 0, 1});
  // Without edges only the node itself shows up.
  CHECK(sort_inclusive_neighbors(edgeless(3), 1, vals) ==
        std::vector<NodeId>{1});
}

TEST_CASE("extreme removal drops at most fault_bound per side") {
  const ValueMap vals{0.1, 0.4, 0.5, 0.6, 0.9};
  const std::vector<NodeId> sorted{0, 1, 2, 3, 4};

  RemovalRecord rec = remove_extremes(2, sorted, vals, 1);
  CHECK(rec.removed_below == std::vector<NodeId>{0});
  CHECK(rec.kept == std::vector<NodeId>{1, 2, 3});
  CHECK(rec.removed_above == std::vector<NodeId>{4});

  rec = remove_extremes(2, sorted, vals, 0);
  CHECK(rec.removed_below.empty());
  CHECK(rec.kept == sorted);

  // More leeway than there are strictly smaller/larger values: drop them all.
  rec = remove_extremes(2, sorted, vals, 10);
  CHECK(rec.removed_below == std::vector<NodeId>{0, 1});
  CHECK(rec.kept == std::vector<NodeId>{2});
  CHECK(rec.removed_above == std::vector<NodeId>{3, 4});

  // Ties with the own value are never removed.
  const ValueMap tied{0.5, 0.5, 0.5};
  rec = remove_extremes(1, {0, 1, 2}, tied, 2);
  CHECK(rec.kept == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("extreme removal validates its input") {
  const ValueMap vals{0.2, 0.1};
  CHECK_THROWS_AS(remove_extremes(0, {0, 1}, vals, -1), std::invalid_argument);
  CHECK_THROWS_AS(remove_extremes(0, {0, 1}, vals, 1), std::invalid_argument);
  CHECK_THROWS_AS(remove_extremes(0, {1}, vals, 1), std::invalid_argument);
  CHECK_THROWS_AS(remove_extremes(0, {0, 5}, vals, 1), std::invalid_argument);
  CHECK_NOTHROW(remove_extremes(0, {1, 0}, vals, 1));
}

TEST_CASE("removal partition matches a direct filter") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.integer(1, 9);
    ValueMap vals(n);
    // Quantized values to force ties.
    for (double& v : vals) v = rng.integer(0, 4) * 0.25;
    const Digraph g = random_digraph(n, rng.real(0.0, 1.0), rng);
    const NodeId i = rng.integer(0, n - 1);
    const int fault_bound = rng.integer(0, n + 1);

    const auto sorted = sort_inclusive_neighbors(g, i, vals);
    const auto rec = remove_extremes(i, sorted, vals, fault_bound);

    // Independent route: position-based filter over the sorted list.
    const int m = static_cast<int>(sorted.size());
    const double pivot = vals[i];
    std::vector<NodeId> below, kept, above;
    for (int idx = 0; idx < m; ++idx) {
      const double v = vals[sorted[idx]];
      if (v < pivot && idx < fault_bound) {
        below.push_back(sorted[idx]);
      } else if (v > pivot && idx >= m - fault_bound) {
        above.push_back(sorted[idx]);
      } else {
        kept.push_back(sorted[idx]);
      }
    }
    CHECK(rec.removed_below == below);
    CHECK(rec.kept == kept);
    CHECK(rec.removed_above == above);

    // The three pieces concatenate back to the sorted list.
    std::vector<NodeId> glued = rec.removed_below;
    glued.insert(glued.end(), rec.kept.begin(), rec.kept.end());
    glued.insert(glued.end(), rec.removed_above.begin(),
                 rec.removed_above.end());
    CHECK(glued == sorted);
    CHECK(std::find(rec.kept.begin(), rec.kept.end(), i) != rec.kept.end());
    CHECK(static_cast<int>(rec.removed_below.size()) <= fault_bound);
    CHECK(static_cast<int>(rec.removed_above.size()) <= fault_bound);
  }
}

TEST_CASE("partial removal keeps the extreme adjacent to the own value") {
  // Fewer strictly-smaller values than the bound: the kept front is i itself.
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 8);
    ValueMap vals(n);
    for (double& v : vals) v = rng.integer(0, 3) * 0.5;
    const Digraph g = random_digraph(n, rng.real(0.3, 1.0), rng);
    const NodeId i = rng.integer(0, n - 1);
    const int fault_bound = rng.integer(0, n + 1);
    const auto rec =
        remove_extremes(i, sort_inclusive_neighbors(g, i, vals), vals,
                        fault_bound);
    if (static_cast<int>(rec.removed_below.size()) < fault_bound) {
      CHECK(vals[rec.kept.front()] == vals[i]);
    }
    if (static_cast<int>(rec.removed_above.size()) < fault_bound) {
      CHECK(vals[rec.kept.back()] == vals[i]);
    }
  }
}

TEST_CASE("uniform weights and the policy check") {
  RemovalRecord rec;
  rec.kept = {1, 2, 3};
  const auto w = uniform_weights(rec);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(check_weight_policy(w, rec, 1.0 / 6).empty());

  const auto mismatch = check_weight_policy(std::vector<double>{0.5, 0.5}, rec,
                                            0.1);
  REQUIRE(mismatch.size() == 1);
  CHECK(mismatch[0] == WeightViolation::SizeMismatch);

  const auto bad_sum = check_weight_policy(
      std::vector<double>{0.5, 0.3, 0.3}, rec, 0.1);
  REQUIRE(bad_sum.size() == 1);
  CHECK(bad_sum[0] == WeightViolation::SumNotOne);

  const auto tiny = check_weight_policy(
      std::vector<double>{0.7, 0.25, 0.05}, rec, 0.1);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0] == WeightViolation::BelowAlpha);

  RemovalRecord empty_rec;
  CHECK_THROWS_AS(uniform_weights(empty_rec), std::invalid_argument);
}

TEST_CASE("uniform_for certifies 1/(max in-degree + 1)") {
  const Digraph g = make_graph(6, {{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
  const WeightPolicy p = WeightPolicy::uniform_for(g);
  CHECK(p.rule == WeightPolicy::Rule::Uniform);
  CHECK(p.alpha == doctest::Approx(1.0 / 6).epsilon(1e-15));
  // The edgeless graph cannot certify 1, so it falls back to 1/2.
  CHECK(WeightPolicy::uniform_for(edgeless(4)).alpha == 0.5);
  CHECK_THROWS_AS(WeightPolicy::fixed({0.5, 0.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(WeightPolicy::fixed({0.5, 0.5}, 1.0), std::invalid_argument);
}

TEST_CASE("update examples") {
  const ValueMap vals{0.1, 0.4, 0.5, 0.6, 0.9};
  RemovalRecord rec;
  rec.removed_below = {0};
  rec.kept = {1, 2, 3};
  rec.removed_above = {4};
  const WeightPolicy uniform{WeightPolicy::Rule::Uniform, 0.2, {}};
  CHECK(wmsr_update(2, rec, vals, uniform) ==
        doctest::Approx(0.5).epsilon(1e-15));

  RemovalRecord pair;
  pair.kept = {0, 1};
  const ValueMap unit{0.0, 1.0};
  const WeightPolicy fixed = WeightPolicy::fixed({0.25, 0.75}, 0.25);
  CHECK(wmsr_update(0, pair, unit, fixed) ==
        doctest::Approx(0.75).epsilon(1e-15));

  // i has to survive its own removal pass.
  CHECK_THROWS_AS(wmsr_update(0, rec, vals, uniform), std::invalid_argument);
  // Fixed weights below alpha violate the policy.
  CHECK_THROWS_AS(
      wmsr_update(0, pair, unit, WeightPolicy::fixed({0.1, 0.9}, 0.25)),
      std::invalid_argument);
}

TEST_CASE("uniform updates over equal integer values are bit-exact") {
  for (int k = 1; k <= 9; ++k) {
    RemovalRecord rec;
    ValueMap vals;
    for (int j = 0; j < k; ++j) {
      rec.kept.push_back(j);
      vals.push_back(1.0);
    }
    const WeightPolicy uniform{WeightPolicy::Rule::Uniform, 1.0 / (k + 1), {}};
    CHECK(wmsr_update(0, rec, vals, uniform) == 1.0);
  }
}

TEST_CASE("conforming update stays inside the kept value range") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.integer(1, 9);
    const Digraph g = random_digraph(n, rng.real(0.0, 1.0), rng);
    ValueMap vals(n);
    for (double& v : vals) v = rng.real(-5.0, 5.0);
    const NodeId i = rng.integer(0, n - 1);
    const int fault_bound = rng.integer(0, 3);

    NodeUpdate record;
    const double next =
        conforming_update(g, vals, i, fault_bound, WeightPolicy::uniform_for(g),
                          &record);
    double lo = vals[record.removal.kept.front()];
    double hi = lo;
    for (NodeId j : record.removal.kept) {
      lo = std::min(lo, vals[j]);
      hi = std::max(hi, vals[j]);
    }
    CHECK(next >= lo - 1e-12);
    CHECK(next <= hi + 1e-12);
    CHECK(check_weight_policy(record.weights, record.removal, 0.0).empty());
  }
}

TEST_CASE("values of uninvolved nodes do not perturb an update") {
  const Digraph g = make_graph(4, {{1, 0}, {2, 0}});
  ValueMap vals{0.2, 0.8, 0.5, 123.0};
  const WeightPolicy policy = WeightPolicy::uniform_for(g);
  const double base = conforming_update(g, vals, 0, 1, policy);
  vals[3] = -777.0;
  CHECK(conforming_update(g, vals, 0, 1, policy) == base);
}
