#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kout/generators.hpp"
#include "kout/longpath_dfs.hpp"
#include "kout/stats.hpp"
#include "oracles.hpp"

using namespace kout;

namespace {

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, std::vector<Edge>{}); }

/*
 * Checks every per-step invariant from scratch after each step. Returns the
 * number of steps checked.
 */
std::size_t sweep_invariants(const Graph& g, std::size_t k, std::size_t budget, std::uint64_t seed,
                             RestartRule rule = RestartRule::Uniform) {
  ChoiceOracle oracle(g, ColorSpec::single(k), Mode::WithReplacement, seed);
  Rng rng(seed + 1);
  DfsExplorer explorer(oracle, colors::kDefault, rng);
  const std::size_t n = g.vertex_count();
  std::size_t checked = 0;
  DfsOptions options;
  options.restart = rule;
  options.observer = [&](const DfsState& st) {
    ++checked;
    std::size_t s = 0, u = 0, t = 0, isolated_in_s = 0;
    for (VertexId v = 0; v < n; ++v) {
      switch (st.mark(v)) {
        case DfsMark::Exhausted:
          ++s;
          if (g.degree(v) == 0) {
            ++isolated_in_s;
            EXPECT_EQ(oracle.used(v, colors::kDefault), 0u);
          } else {
            EXPECT_EQ(oracle.used(v, colors::kDefault), k);
          }
          break;
        case DfsMark::Stacked: ++u; break;
        case DfsMark::Unvisited: ++t; break;
      }
    }
    EXPECT_EQ(s + u + t, n);
    EXPECT_EQ(s, st.exhausted_count());
    EXPECT_EQ(u, st.stack().size());
    EXPECT_EQ(t, st.unvisited_count());
    EXPECT_GE(s + u, st.hits());
    EXPECT_EQ(s + u, st.hits() + st.restarts());
    EXPECT_LE((s - isolated_in_s) * k, st.draws());
    EXPECT_EQ(st.draws(), oracle.log().size());

    // Stack is a path of logged hit edges.
    const auto& stack = st.stack();
    std::set<std::pair<VertexId, VertexId>> logged;
    for (const auto& d : oracle.log()) logged.insert({d.vertex, d.chosen});
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
      EXPECT_TRUE(logged.count({stack[i], stack[i + 1]}));
      EXPECT_TRUE(g.has_edge(stack[i], stack[i + 1]));
      EXPECT_EQ(st.parent(stack[i + 1]), stack[i]);
    }
    for (VertexId v : stack) EXPECT_EQ(st.mark(v), DfsMark::Stacked);
  };
  const auto run = explorer.run(budget, options);
  EXPECT_TRUE(run.best_path.is_path_in(g));
  EXPECT_LE(run.final_state.draws, budget);
  return checked;
}

}  // namespace

TEST(Dfs, CompleteGraphK2) {
  Rng rng(4);
  DfsOptions options;
  options.record_trace = true;
  const auto run = dfs_long_path(complete_graph(2), 1, 10, rng, options);
  EXPECT_EQ(run.best_path.size(), 2u);
  EXPECT_EQ(run.final_state.hits, 1u);
  EXPECT_EQ(run.final_state.restarts, 1u);
  EXPECT_EQ(run.final_state.exhausted, 2u);
  EXPECT_EQ(run.final_state.draws, 2u);
  ASSERT_GE(run.trace.size(), 2u);
  EXPECT_EQ(run.trace[1].hits + run.trace[1].restarts, 2u);
  EXPECT_EQ(run.trace[1].stacked, 2u);
}

TEST(Dfs, EdgelessGraphRestartsEverywhere) {
  Rng rng(1);
  const auto run = dfs_long_path(empty_graph(7), 3, 5, rng);
  EXPECT_EQ(run.best_path.length(), 0u);
  EXPECT_EQ(run.final_state.hits, 0u);
  EXPECT_EQ(run.final_state.restarts, 7u);
  EXPECT_EQ(run.final_state.exhausted, 7u);
  EXPECT_EQ(run.final_state.draws, 0u);
}

TEST(Dfs, InvariantsHoldOnCompleteGraph) {
  // eps = 0.25, m = 29, k = 4: budget floor(eps k m) = 29.
  const std::size_t budget = long_path_budget(0.25, 4, 29);
  EXPECT_EQ(budget, 29u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_GT(sweep_invariants(complete_graph(30), 4, budget, seed), 0u);
}

TEST(Dfs, InvariantsHoldOnRandomGraphs) {
  Rng rng(9);
  for (std::uint64_t t = 0; t < 150; ++t) {
    const Graph g = oracle::random_graph(5 + t % 30, 0.05 + 0.01 * static_cast<double>(t % 20), rng);
    sweep_invariants(g, 1 + t % 4, 10 + 7 * t, t, t % 2 ? RestartRule::Uniform : RestartRule::LowestId);
  }
}

TEST(Dfs, SeededReplayIsIdentical) {
  DfsOptions options;
  options.record_trace = true;
  const Graph g = complete_graph(30);
  Rng a(123), b(123);
  const auto x = dfs_long_path(g, 4, 29, a, options);
  const auto y = dfs_long_path(g, 4, 29, b, options);
  ASSERT_EQ(x.trace.size(), y.trace.size());
  std::ostringstream sx, sy;
  write_trace_csv(sx, x.trace);
  write_trace_csv(sy, y.trace);
  EXPECT_EQ(sx.str(), sy.str());
  EXPECT_EQ(x.best_path, y.best_path);
  EXPECT_EQ(x.tree_edges, y.tree_edges);
  EXPECT_EQ(sx.str().substr(0, 31), "step,S,U,T,hits,restarts,draws\n");
}

TEST(Dfs, LowestIdRestartIsDeterministicOnEdgelessGraph) {
  const Graph g = empty_graph(4);
  ChoiceOracle oracle(g, ColorSpec::single(1), Mode::WithReplacement, 0);
  Rng rng(0);
  DfsExplorer explorer(oracle, colors::kDefault, rng);
  DfsOptions options;
  options.restart = RestartRule::LowestId;
  const auto run = explorer.run(3, options);
  EXPECT_EQ(run.discovery_order, (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(Dfs, StopAtStack) {
  Rng rng(2);
  DfsOptions options;
  options.stop_at_stack = 10;
  const auto run = dfs_long_path(complete_graph(50), 10, 100000, rng, options);
  EXPECT_TRUE(run.reached_stop);
  EXPECT_EQ(run.best_path.size(), 10u);
}

TEST(Dfs, BestPathIsLongestStackSeen) {
  Rng rng(6);
  DfsOptions options;
  options.record_trace = true;
  const auto run = dfs_long_path(cycle_graph(40), 2, 400, rng, options);
  std::size_t longest = 0;
  for (const auto& s : run.trace) longest = std::max(longest, s.stacked);
  EXPECT_EQ(run.best_path.size(), longest);
}

TEST(LongPathTrial, TrivialTarget) {
  Rng rng(1);
  const auto r = theorem3_trial(path_graph(5), 1, 0.5, rng);
  EXPECT_EQ(r.m, 1u);
  EXPECT_DOUBLE_EQ(r.target, 0.0);
  EXPECT_TRUE(r.success);
  EXPECT_FALSE(r.k_meets_bound);
}

TEST(LongPathTrial, FieldsAndOverride) {
  Rng rng(1);
  const Graph g = complete_graph(40);
  const auto r = theorem3_trial(g, 32, 0.25, rng, 20);
  EXPECT_EQ(r.m, 20u);
  EXPECT_EQ(r.budget, 160u);
  EXPECT_DOUBLE_EQ(r.target, 10.0);
  EXPECT_TRUE(r.k_meets_bound);
  EXPECT_EQ(r.success, static_cast<double>(r.achieved_length) >= r.target);
}

TEST(LongPathTrial, SuccessFrequencyNonDecreasingInK) {
  Rng host_rng(40);
  const Graph g = random_min_degree_host(200, 30, host_rng);
  std::vector<TrendPoint> points;
  constexpr std::size_t kTrials = 60;
  for (std::size_t k : {5u, 10u, 25u, 50u}) {
    TrendPoint p{static_cast<double>(k), 0, kTrials};
    for (std::size_t i = 0; i < kTrials; ++i) {
      Rng rng(1000 + i);
      p.successes += theorem3_trial(g, k, 0.1, rng, 30).success;
    }
    points.push_back(p);
  }
  const auto report = trend_report(points);
  EXPECT_TRUE(report.non_decreasing) << report.table();
  EXPECT_GT(points.back().successes, points.front().successes) << report.table();
}
