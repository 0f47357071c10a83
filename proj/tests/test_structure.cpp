#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kout/audits.hpp"
#include "kout/connectivity.hpp"
#include "kout/edge_list.hpp"
#include "kout/generators.hpp"
#include "kout/sampler.hpp"
#include "oracles.hpp"

using namespace kout;

namespace {

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, std::vector<Edge>{}); }

// Choice table for color 0 from per-vertex lists.
KOutSample fixture_sample(const Graph& host, std::size_t k, const std::vector<std::vector<VertexId>>& picks) {
  std::vector<VertexId> flat;
  for (const auto& row : picks) flat.insert(flat.end(), row.begin(), row.end());
  return KOutSample(host, ColorSpec::single(k), Mode::WithoutReplacement, {flat});
}

}  // namespace

TEST(Components, SmallExamples) {
  const auto k5 = connected_components(complete_graph(5));
  EXPECT_EQ(k5.count(), 1u);
  EXPECT_EQ(k5.sizes[0], 5u);
  EXPECT_EQ(connected_components(empty_graph(3)).count(), 3u);
}

TEST(Components, AgreeWithReachabilityClosure) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(1 + t % 12, 0.2, rng);
    const auto parts = connected_components(g);
    const auto labels = oracle::component_min_labels(g);
    std::size_t total = 0;
    for (std::size_t s : parts.sizes) total += s;
    EXPECT_EQ(total, g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(parts.labels[u] == parts.labels[v], labels[u] == labels[v]);
      }
    }
  }
}

TEST(Components, MaskedVerticesGetNoLabel) {
  const Graph g = path_graph(5);
  const auto parts = connected_components(g, {true, true, false, true, true});
  EXPECT_EQ(parts.count(), 2u);
  EXPECT_EQ(parts.labels[2], std::numeric_limits<std::uint32_t>::max());
}

TEST(Connectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(cycle_graph(5)), 2u);
  EXPECT_EQ(vertex_connectivity(star_graph(5)), 1u);
  EXPECT_EQ(vertex_connectivity(complete_graph(6)), 5u);
  EXPECT_EQ(vertex_connectivity(petersen_graph()), 3u);
  EXPECT_EQ(vertex_connectivity(empty_graph(4)), 0u);
  EXPECT_EQ(vertex_connectivity(two_cliques_plus_matching(10)), 5u);
  EXPECT_TRUE(is_k_connected(cycle_graph(7), 2));
  EXPECT_FALSE(is_k_connected(cycle_graph(7), 3));
}

TEST(Connectivity, MatchesExhaustiveCutsUpToEightVertices) {
  Rng rng(2024);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 7;
    const double p = 0.3 + 0.1 * (t % 6);
    const Graph g = oracle::random_graph(n, p, rng);
    const std::size_t expected = oracle::vertex_connectivity(g);
    EXPECT_EQ(vertex_connectivity(g), expected) << write_edge_list(g);
    for (std::size_t k = 1; k + 1 <= n; ++k) EXPECT_EQ(is_k_connected(g, k), expected >= k);
    for (std::size_t limit = 0; limit < n; ++limit) {
      EXPECT_EQ(detail::connectivity_up_to(g, limit), std::min(expected, limit));
    }
  }
}

TEST(Connectivity, WhitneyInequality) {
  Rng rng(8);
  for (int t = 0; t < 80; ++t) {
    const Graph g = oracle::random_connected_graph(10 + t % 40, 0.15, rng);
    EXPECT_LE(vertex_connectivity(g), g.min_degree());
  }
}

TEST(Isolated, Examples) {
  EXPECT_TRUE(isolated_vertices(complete_graph(5)).empty());
  EXPECT_EQ(isolated_vertices(empty_graph(3)), (std::vector<VertexId>{0, 1, 2}));
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(15, 0.08, rng);
    std::vector<VertexId> expected;
    for (VertexId v = 0; v < 15; ++v) {
      if (g.degree(v) == 0) expected.push_back(v);
    }
    EXPECT_EQ(isolated_vertices(g), expected);
  }
}

TEST(Cover, CompleteGraphThresholdOne) {
  Rng rng(1);
  const auto result = common_neighbor_cover(complete_graph(20), 1, 0.5, 50, rng);
  EXPECT_GE(result.cover.size(), 1u);
  EXPECT_TRUE(std::is_sorted(result.cover.begin(), result.cover.end()));
}

TEST(Cover, CrossCliquePairsDefeatLargeThresholds) {
  const Graph g = two_cliques_plus_matching(20);
  std::size_t max_cross = 0;
  for (VertexId u = 0; u < 10; ++u) {
    for (VertexId v = 10; v < 20; ++v) max_cross = std::max(max_cross, oracle::common_neighbors(g, u, v).size());
  }
  EXPECT_LE(max_cross, 2u);
  Rng rng(3);
  try {
    common_neighbor_cover(g, 11, 0.3, 5, rng);
    ADD_FAILURE() << "cover accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RetriesExhausted);
    EXPECT_GT(e.detail(), 0u);
  }
}

TEST(Cover, PairConditionHoldsOnReturnedCover) {
  Rng rng(77);
  const Graph g = random_sdg(120, 0.1, 0.3, rng);
  const auto result = common_neighbor_cover(g, 5, 0.2, 20, rng);
  const std::set<VertexId> in(result.cover.begin(), result.cover.end());
  for (VertexId u = 0; u < 120; ++u) {
    for (VertexId v = u + 1; v < 120; ++v) {
      if (in.count(u) || in.count(v)) continue;
      std::size_t inside = 0;
      for (VertexId w : oracle::common_neighbors(g, u, v)) inside += in.count(w);
      EXPECT_GE(inside, 5u);
    }
  }
}

TEST(Cover, CalibratedDefaultsSucceedOnRandomSdg) {
  std::size_t ok = 0;
  constexpr std::size_t kSeeds = 40;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Rng rng(seed);
    const Graph g = random_sdg(200, 0.1, 0.3, rng);
    try {
      common_neighbor_cover(g, 5, 0.15, 10, rng);
      ++ok;
    } catch (const Error&) {
    }
  }
  EXPECT_GE(static_cast<double>(ok), 0.95 * kSeeds);
}

TEST(ComponentAudit, KOneChecksEmptyRemovalOnly) {
  Rng rng(1);
  const auto report = small_component_audit(complete_graph(6), {}, 1, 0.1, Exhaustive{}, rng);
  EXPECT_EQ(report.checked, 1u);
  EXPECT_EQ(report.violation_count, 0u);
}

TEST(ComponentAudit, CliqueRemainderHasNoViolations) {
  Rng rng(1);
  const std::vector<VertexId> cover{0, 1, 2};
  const std::size_t n = 20, k = 3;
  const double c = static_cast<double>(n - cover.size() - k + 1) / static_cast<double>(n);
  const auto report = small_component_audit(complete_graph(n), cover, k, c, Exhaustive{}, rng);
  EXPECT_EQ(report.checked, 136u);  // C(17, 2)
  EXPECT_EQ(report.violation_count, 0u);
}

TEST(ComponentAudit, SmallComponentIsReported) {
  // K_6 on 0..5 plus an isolated edge {6,7}.
  std::vector<Edge> edges{{6, 7}};
  for (VertexId u = 0; u < 6; ++u) {
    for (VertexId v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
  }
  const Graph g = Graph::from_edges(8, edges);
  Rng rng(1);
  const auto report = small_component_audit(g, {}, 1, 0.5, Exhaustive{}, rng);
  ASSERT_EQ(report.violation_count, 1u);
  EXPECT_EQ(report.violations[0].component, (std::vector<VertexId>{6, 7}));
  const auto randomized = small_component_audit(g, {}, 2, 0.5, Randomized{30}, rng);
  EXPECT_EQ(randomized.checked, 30u);
  EXPECT_GT(randomized.violation_count, 0u);
}

TEST(ComponentAudit, ExhaustiveLimit) {
  Rng rng(1);
  try {
    small_component_audit(complete_graph(200), {}, 5, 0.1, Exhaustive{}, rng);
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeForExhaustive);
  }
}

TEST(Expansion, SingletonsExpandWithThreeDistinctChoices) {
  Rng rng(6);
  const Graph host = complete_graph(12);
  const auto s = sample(host, 3, Mode::WithoutReplacement, rng);
  const auto report = expansion_check(s, 1.0 / 12.0, 3.0, Exhaustive{}, rng);
  EXPECT_EQ(report.checked, 12u);
  EXPECT_EQ(report.violation_count, 0u);
  EXPECT_FALSE(report.witness);
}

TEST(Expansion, ConstructedWitness) {
  // S = {0,1}: all choices inside S ∪ T with T = {2..6}, |T| = 3|S| - 1.
  const Graph host = complete_graph(12);
  std::vector<std::vector<VertexId>> picks(12);
  picks[0] = {1, 2, 3};
  picks[1] = {4, 5, 6};
  for (VertexId v = 2; v < 12; ++v) picks[v] = {static_cast<VertexId>((v + 1) % 12), static_cast<VertexId>((v + 2) % 12),
                                                static_cast<VertexId>((v + 3) % 12)};
  const auto s = fixture_sample(host, 3, picks);
  const std::vector<VertexId> set{0, 1};
  EXPECT_TRUE(violates_expansion(s, set, 3.0));
  Rng rng(1);
  const auto report = expansion_check(s, 2.0 / 12.0, 3.0, Exhaustive{}, rng);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(*report.witness, set);  // first violator in size-then-lexicographic order
}

TEST(Expansion, WitnessesRevalidate) {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto s = sample(complete_graph(15), 2, Mode::WithoutReplacement, rng);
    const auto report = expansion_check(s, 0.2, 3.0, Randomized{2000}, rng);
    EXPECT_EQ(report.checked, 2000u);
    if (!report.witness) continue;
    const auto& w = *report.witness;
    EXPECT_GE(w.size(), 1u);
    EXPECT_LE(w.size(), 3u);
    std::set<VertexId> in(w.begin(), w.end()), out;
    for (const auto& [v, x] : s.arcs()) {
      if (in.count(v) && !in.count(x)) out.insert(x);
    }
    EXPECT_LT(static_cast<double>(out.size()), 3.0 * static_cast<double>(w.size()));
  }
}

TEST(Expansion, ExhaustiveLimit) {
  Rng rng(1);
  const auto s = sample(complete_graph(60), 3, Mode::WithoutReplacement, rng);
  try {
    expansion_check(s, 0.2, 3.0, Exhaustive{}, rng);
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeForExhaustive);
  }
}
