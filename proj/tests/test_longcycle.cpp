#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kout/exploration_tree.hpp"
#include "kout/generators.hpp"
#include "kout/longcycle.hpp"
#include "oracles.hpp"

using namespace kout;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no kout::Error thrown";
  return ErrorCode::ConfigError;
}

// Tree from a parent array; kAbsent marks roots, insertion in index order.
ExplorationTree tree_from_parents(const std::vector<VertexId>& parent, std::size_t n) {
  ExplorationTree t(n);
  for (VertexId v = 0; v < parent.size(); ++v) {
    if (parent[v] == ExplorationTree::kAbsent) {
      t.add_root(v);
    } else {
      t.attach(v, parent[v]);
    }
  }
  return t;
}

// Tree distance by walking parents in a plain parent array.
std::optional<std::size_t> walk_distance(const std::vector<VertexId>& parent, VertexId u, VertexId v) {
  std::vector<VertexId> up_u{u}, up_v{v};
  while (parent[up_u.back()] != ExplorationTree::kAbsent) up_u.push_back(parent[up_u.back()]);
  while (parent[up_v.back()] != ExplorationTree::kAbsent) up_v.push_back(parent[up_v.back()]);
  if (up_u.back() != up_v.back()) return std::nullopt;
  for (std::size_t i = 0; i < up_u.size(); ++i) {
    const auto it = std::find(up_v.begin(), up_v.end(), up_u[i]);
    if (it != up_v.end()) return i + static_cast<std::size_t>(it - up_v.begin());
  }
  return std::nullopt;
}

std::set<std::pair<VertexId, VertexId>> revealed_pairs(const std::vector<Draw>& log) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (const auto& d : log) out.insert({std::min(d.vertex, d.chosen), std::max(d.vertex, d.chosen)});
  return out;
}

}  // namespace

TEST(ExplorationTree, LcaDistancePath) {
  // Forest: 0 -> {1, 2}, 1 -> {3, 4}; 5 -> {6}.
  const auto t = tree_from_parents({ExplorationTree::kAbsent, 0, 0, 1, 1, ExplorationTree::kAbsent, 5}, 7);
  EXPECT_EQ(t.lca(3, 4), 1u);
  EXPECT_EQ(t.lca(3, 2), 0u);
  EXPECT_EQ(t.distance(3, 2), 3u);
  EXPECT_EQ(t.distance(4, 4), 0u);
  EXPECT_FALSE(t.lca(3, 6));
  EXPECT_FALSE(t.distance(3, 6));
  EXPECT_EQ(t.path(3, 2), (std::vector<VertexId>{3, 1, 0, 2}));
  EXPECT_EQ(t.path(2, 3), (std::vector<VertexId>{2, 0, 1, 3}));
  EXPECT_TRUE(t.path(3, 6).empty());
  EXPECT_EQ(t.ancestor_at_depth(4, 0), 0u);
  EXPECT_EQ(t.depth(6), 1u);
  EXPECT_EQ(t.parent(3), 1u);
  EXPECT_FALSE(t.parent(0));
  EXPECT_EQ(t.order_index(6), 6u);
  EXPECT_EQ(t.size(), 7u);
}

TEST(ExplorationTree, Errors) {
  ExplorationTree t(4);
  t.add_root(0);
  EXPECT_EQ(code_of([&] { t.add_root(0); }), ErrorCode::BadVertex);
  EXPECT_EQ(code_of([&] { t.attach(2, 3); }), ErrorCode::BadVertex);
  EXPECT_EQ(code_of([&] { t.attach(9, 0); }), ErrorCode::BadVertex);
}

TEST(ExplorationTree, RandomForestsMatchParentWalk) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 60;
    std::vector<VertexId> parent(n, ExplorationTree::kAbsent);
    for (VertexId v = 1; v < n; ++v) {
      if (uniform_below(rng, 8) != 0) parent[v] = static_cast<VertexId>(uniform_below(rng, v));
    }
    const auto t = tree_from_parents(parent, n);
    for (int q = 0; q < 100; ++q) {
      const auto u = static_cast<VertexId>(uniform_below(rng, n));
      const auto v = static_cast<VertexId>(uniform_below(rng, n));
      const auto expected = walk_distance(parent, u, v);
      EXPECT_EQ(t.distance(u, v), expected);
      EXPECT_EQ(t.distance(v, u), expected);
      const auto p = t.path(u, v);
      if (!expected) {
        EXPECT_TRUE(p.empty());
        continue;
      }
      ASSERT_EQ(p.size(), *expected + 1);
      EXPECT_EQ(p.front(), u);
      EXPECT_EQ(p.back(), v);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        EXPECT_TRUE(parent[p[i]] == p[i + 1] || parent[p[i + 1]] == p[i]);
      }
      // Triangle equality through every vertex on the path.
      for (VertexId x : p) EXPECT_EQ(*t.distance(u, x) + *t.distance(x, v), *expected);
    }
  }
}

TEST(EpochColor, ParityRule) {
  EXPECT_EQ(epoch_color("010"), colors::kLightRed);
  EXPECT_EQ(epoch_color("01"), colors::kDarkBlue);
  EXPECT_EQ(epoch_color("00"), colors::kDarkRed);
  EXPECT_EQ(epoch_color("0"), colors::kLightRed);
  EXPECT_EQ(epoch_color("011"), colors::kLightBlue);
  EXPECT_EQ(code_of([] { epoch_color(""); }), ErrorCode::BadId);
  EXPECT_EQ(code_of([] { epoch_color("012"); }), ErrorCode::BadId);
  EXPECT_STREQ(color_name(colors::kDarkBlue), "dark-blue");
}

TEST(Thresholds, TableValues) {
  const auto t = EpochThresholds::make(0.02, 64, 100);
  EXPECT_EQ(t.step_budget, 128u);
  EXPECT_EQ(t.success, 96u);
  EXPECT_EQ(t.interrupt, 2u);
  EXPECT_EQ(t.seeds, 6u);
  EXPECT_EQ(t.far, 62u);
  EXPECT_EQ(t.vset, 2u);
  EXPECT_EQ(t.w_size, 2u);
  EXPECT_EQ(t.segment, 1u);
  EXPECT_DOUBLE_EQ(t.target, 62.0);
  EXPECT_DOUBLE_EQ(t.good, 66.0);
  EXPECT_DOUBLE_EQ(t.rest_bound, 6.0);
  const auto tiny = EpochThresholds::make(0.1, 1, 3);
  EXPECT_EQ(tiny.step_budget, 1u);
  EXPECT_EQ(tiny.interrupt, 1u);
  EXPECT_EQ(tiny.far, 2u);
}

TEST(Classify, Fixtures) {
  const auto th = EpochThresholds::make(0.1, 4, 10);  // far = max(2, ceil(0.1 * 10)) = 2
  // Path 0-1-2-3-4 as tree; host adds chords {4,0} and {4,1} plus leaves 5..7 on 2.
  const Graph g = Graph::from_edges(
      8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 1}, {2, 5}, {2, 6}, {2, 7}});
  ExplorationTree t(8);
  t.add_root(0);
  for (VertexId v = 1; v < 5; ++v) t.attach(v, v - 1);
  // 2 has 2 of 5 neighbors in the tree: 2 < 0.8 * 5.
  EXPECT_EQ(classify(g, t, 2, th), VertexClass::A);
  // 3: both neighbors in the tree, both at distance 1.
  EXPECT_EQ(classify(g, t, 3, th), VertexClass::B);
  // 4: neighbors 3 (d 1), 0 (d 4), 1 (d 3); 2 far >= 0.1 * 3.
  EXPECT_EQ(classify(g, t, 4, th), VertexClass::C);

  // Brute-force count on the same fixture for every tree vertex.
  for (VertexId v = 0; v < 5; ++v) {
    const double d = static_cast<double>(g.degree(v));
    std::size_t in = 0, far = 0;
    for (VertexId w : g.neighbors(v)) {
      if (w < 5) {
        ++in;
        if ((v > w ? v - w : w - v) >= 2) ++far;
      }
    }
    const VertexClass expected = static_cast<double>(in) < 0.8 * d       ? VertexClass::A
                                 : static_cast<double>(far) >= 0.1 * d ? VertexClass::C
                                                                        : VertexClass::B;
    EXPECT_EQ(classify(g, t, v, th), expected) << v;
  }

  // A freshly attached vertex with only its parent in the tree.
  ExplorationTree small(8);
  small.add_root(2);
  small.attach(5, 2);
  EXPECT_EQ(classify(g, small, 2, th), VertexClass::A);
}

TEST(Epoch, CSeedsInterruptBeforeStepping) {
  // eps = 0.25, m = 4: interrupt threshold 1, far 2.
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
  LongCycleSearch search(g, 3, 0.25, 4, 1);
  auto& t = search.tree();
  t.add_root(0);
  for (VertexId v = 1; v < 4; ++v) t.attach(v, v - 1);
  const Epoch& e = search.run_epoch("01", {3});
  EXPECT_EQ(e.outcome, EpochOutcome::InterruptC);
  EXPECT_EQ(e.c, (std::vector<VertexId>{3}));
  EXPECT_EQ(e.steps_used, 0u);
  EXPECT_EQ(e.color, colors::kDarkBlue);
}

TEST(Epoch, NoASeedsFailsWithoutSteps) {
  // eps = 0.25, m = 8: interrupt threshold 2; leaf 1 of a star is class B.
  const Graph g = star_graph(4);
  LongCycleSearch search(g, 3, 0.25, 8, 1);
  auto& t = search.tree();
  t.add_root(0);
  for (VertexId v = 1; v < 5; ++v) t.attach(v, 0);
  const Epoch& e = search.run_epoch("00", {1});
  EXPECT_EQ(e.outcome, EpochOutcome::Fail);
  EXPECT_EQ(e.b, (std::vector<VertexId>{1}));
  EXPECT_EQ(e.steps_used, 0u);
}

TEST(CloseFromC, EmptySetAndForcedChord) {
  const Graph g = cycle_graph(5);
  const auto th = EpochThresholds::make(0.25, 40, 4);
  ChoiceOracle oracle(g, ColorSpec::single(40, colors::kLightRed), Mode::WithReplacement, 7);
  ExplorationTree t(5);
  t.add_root(0);
  for (VertexId v = 1; v < 5; ++v) t.attach(v, v - 1);
  EXPECT_FALSE(close_from_C(g, t, {}, colors::kLightRed, oracle, th).cycle);

  // Tree edges must be revealed for the cycle to validate.
  for (VertexId v = 0; v < 4; ++v) {
    while (oracle.remaining(v, colors::kLightRed) > 0) oracle.draw(v, colors::kLightRed);
  }
  const std::vector<VertexId> c_set{4};
  const auto r = close_from_C(g, t, c_set, colors::kLightRed, oracle, th);
  ASSERT_TRUE(r.cycle);
  EXPECT_EQ(r.length, *t.distance(4, 0) + 1);
  EXPECT_EQ(r.provenance, Provenance::FromC);
  EXPECT_TRUE(oracle::is_simple_cycle(*r.cycle, revealed_pairs(oracle.log())));
  EXPECT_TRUE(r.success());
}

TEST(CloseFromC, UnrevealedTreeEdgesAreRejected) {
  const Graph g = cycle_graph(5);
  const auto th = EpochThresholds::make(0.25, 40, 4);
  ChoiceOracle oracle(g, ColorSpec::single(40, colors::kLightRed), Mode::WithReplacement, 7);
  ExplorationTree t(5);
  t.add_root(0);
  for (VertexId v = 1; v < 5; ++v) t.attach(v, v - 1);
  const std::vector<VertexId> c_set{4};
  EXPECT_FALSE(close_from_C(g, t, c_set, colors::kLightRed, oracle, th).cycle);
}

TEST(CloseFromB, MissingLineage) {
  const Graph g = complete_graph(4);
  ChoiceOracle oracle(g, ColorSpec::four_colors(2), Mode::WithReplacement, 1);
  ExplorationTree t(4);
  const auto th = EpochThresholds::make(0.1, 2, 3);
  EXPECT_EQ(code_of([&] { close_from_B(g, t, {}, BLineage{}, colors::kDarkBlue, oracle, th); }),
            ErrorCode::MissingLineage);
}

TEST(CloseFromB, ConstructedLineageClosesCycle) {
  /*
   * Host K_19. Tree: parent path 0..9 (seeds 8, 9), sibling path 9..16
   * hanging off seed 9, and the B-branch 9-17-18. eps = 0.05, m = 60:
   * |V_j| = 3, segment 2 (17 and 18 share the depth-10 ancestor 17),
   * good threshold (1 - 17 eps) m = 9.
   */
  const std::size_t n = 19;
  const Graph g = complete_graph(n);
  const auto th = EpochThresholds::make(0.05, 400, 60);
  ASSERT_EQ(th.vset, 3u);
  ASSERT_EQ(th.segment, 2u);
  ChoiceOracle oracle(g, ColorSpec({{colors::kLightRed, 400}, {colors::kDarkBlue, 400}}), Mode::WithReplacement, 11);
  ExplorationTree t(n);
  t.add_root(0);
  for (VertexId v = 1; v <= 9; ++v) t.attach(v, v - 1);
  t.attach(10, 9);
  for (VertexId v = 11; v <= 16; ++v) t.attach(v, v - 1);
  t.attach(17, 9);
  t.attach(18, 17);
  // Reveal every tree edge with setup draws of another color.
  for (VertexId v = 1; v < n; ++v) {
    const VertexId p = *t.parent(v);
    while (!revealed_pairs(oracle.log()).count({std::min(v, p), std::max(v, p)}) &&
           oracle.remaining(v, colors::kLightRed) > 0) {
      oracle.draw(v, colors::kLightRed);
    }
  }
  Epoch parent, sibling;
  for (VertexId v = 0; v <= 9; ++v) parent.path.push_back(v);
  for (VertexId v = 9; v <= 16; ++v) sibling.path.push_back(v);
  const std::vector<VertexId> seeds{8, 9};
  const std::vector<VertexId> b_set{17, 18};
  const auto closure = close_from_B(g, t, b_set, BLineage{&parent, &sibling, seeds}, colors::kDarkBlue, oracle, th);
  EXPECT_EQ(closure.w, b_set);
  ASSERT_EQ(closure.diagnostics.size(), 2u);
  for (const auto& d : closure.diagnostics) {
    EXPECT_TRUE(d.constructed);
    EXPECT_GE(d.n1, 2 * th.vset);
    EXPECT_GE(d.n2, 2 * th.vset);
    EXPECT_EQ(d.rho, 9u);
    EXPECT_TRUE(d.good) << d.v << " score " << d.score;
  }
  ASSERT_TRUE(closure.result.cycle);
  EXPECT_EQ(closure.result.provenance, Provenance::FromB);
  EXPECT_TRUE(oracle::is_simple_cycle(*closure.result.cycle, revealed_pairs(oracle.log())));
  EXPECT_EQ(closure.result.cycle->front(), 17u);
  EXPECT_TRUE(closure.result.success());
}

TEST(CloseFromB, SingleGoodVertexGivesNone) {
  const Graph g = complete_graph(6);
  ChoiceOracle oracle(g, ColorSpec::four_colors(2), Mode::WithReplacement, 1);
  ExplorationTree t(6);
  t.add_root(0);
  for (VertexId v = 1; v < 6; ++v) t.attach(v, v - 1);
  const auto th = EpochThresholds::make(0.1, 2, 10);
  Epoch parent, sibling;
  parent.path = {0, 1, 2};
  sibling.path = {3, 4};
  const std::vector<VertexId> seeds{2};
  const std::vector<VertexId> b_set{5};
  const auto closure = close_from_B(g, t, b_set, BLineage{&parent, &sibling, seeds}, colors::kDarkBlue, oracle, th);
  EXPECT_FALSE(closure.result.cycle);
}

namespace {

struct RunFingerprint {
  std::vector<std::string> ids;
  std::vector<std::size_t> sizes;
  std::optional<std::string> interrupted_at;
  std::optional<std::vector<VertexId>> cycle;
  std::size_t draws = 0;
  friend bool operator==(const RunFingerprint&, const RunFingerprint&) = default;
};

RunFingerprint fingerprint(const LongCycleRun& r) {
  RunFingerprint f;
  for (const auto& e : r.epochs) {
    f.ids.push_back(e.id + ":" + to_string(e.outcome));
    for (std::size_t s : {e.a.size(), e.b.size(), e.c.size(), e.steps_used, e.path.size()}) f.sizes.push_back(s);
  }
  f.interrupted_at = r.interrupted_at;
  f.cycle = r.result.cycle;
  f.draws = r.log.size();
  return f;
}

void check_run_invariants(const Graph& g, const LongCycleRun& r) {
  const auto& th = r.thresholds;
  const auto revealed = revealed_pairs(r.log);
  std::set<VertexId> classified;
  for (const auto& e : r.epochs) {
    EXPECT_EQ(e.color, epoch_color(e.id));
    EXPECT_LE(e.steps_used, th.step_budget);
    std::set<VertexId> mine;
    for (const auto* set : {&e.a, &e.b, &e.c}) {
      for (VertexId v : *set) EXPECT_TRUE(mine.insert(v).second) << "class overlap in " << e.id;
    }
    // Discoveries are classified exactly once across all epochs.
    for (VertexId v : e.discovered) EXPECT_TRUE(classified.insert(v).second);
    if (e.outcome == EpochOutcome::Success) {
      EXPECT_TRUE(e.rest_bound_ok) << e.id << " |R| = " << e.rest.size();
      EXPECT_LT(static_cast<double>(e.rest.size()), th.rest_bound) << e.id;
      EXPECT_GE(e.a.size(), th.success);
      for (std::size_t i = 0; i + 1 < e.path.size(); ++i) {
        EXPECT_TRUE(revealed.count({std::min(e.path[i], e.path[i + 1]), std::max(e.path[i], e.path[i + 1])}));
      }
    }
  }
  if (r.result.cycle) {
    EXPECT_TRUE(oracle::is_simple_cycle(*r.result.cycle, revealed));
    EXPECT_EQ(r.result.length, r.result.cycle->size());
    EXPECT_TRUE(is_valid_cycle(g, *r.result.cycle));
    EXPECT_EQ(r.result.success(), static_cast<double>(r.result.length) >= th.target);
  }
  std::vector<std::vector<std::size_t>> per_color(g.vertex_count(), std::vector<std::size_t>(4, 0));
  for (const auto& d : r.log) EXPECT_LE(++per_color[d.vertex][d.color], th.k);
}

}  // namespace

TEST(LongCycle, SeededReplayOnMinDegreeHost) {
  Rng host_rng(600);
  const Graph g = random_min_degree_host(600, 60, host_rng);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Rng a(seed), b(seed);
    const auto x = long_cycle(g, 64, 0.02, a, 60);
    const auto y = long_cycle(g, 64, 0.02, b, 60);
    EXPECT_EQ(fingerprint(x), fingerprint(y));
    check_run_invariants(g, x);
  }
}

TEST(LongCycle, InvariantsAcrossRegimes) {
  struct Case {
    std::size_t n, m, k;
    double eps;
  };
  std::size_t with_cycle = 0;
  for (const Case& c : {Case{120, 100, 128, 0.02}, Case{60, 50, 32, 0.05}, Case{105, 100, 128, 0.03},
                        Case{80, 40, 16, 0.05}}) {
    Rng host_rng(c.n);
    const Graph g = random_min_degree_host(c.n, c.m, host_rng);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      const auto r = long_cycle(g, c.k, c.eps, rng, c.m);
      check_run_invariants(g, r);
      with_cycle += r.result.cycle.has_value();
      EXPECT_FALSE(r.interrupted_at && r.fallback_used);
    }
  }
  EXPECT_GT(with_cycle, 0u);
}

TEST(LongCycle, TrivialTargetForLargeEps) {
  Rng rng(5);
  const Graph g = complete_graph(30);
  const auto r = long_cycle(g, 8, 0.06, rng);
  EXPECT_LE(r.result.target, 0.0);
  EXPECT_EQ(r.result.success(), r.result.cycle.has_value());
}

TEST(LongCycle, EpochOrderIsLexicographic) {
  Rng host_rng(9);
  const Graph g = random_min_degree_host(300, 60, host_rng);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const auto r = long_cycle(g, 64, 0.02, rng, 60);
    ASSERT_FALSE(r.epochs.empty());
    EXPECT_EQ(r.epochs.front().id, "0");
    for (std::size_t i = 1; i < r.epochs.size(); ++i) EXPECT_LT(r.epochs[i - 1].id, r.epochs[i].id);
  }
}
