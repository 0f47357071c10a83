#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "kout/error.hpp"
#include "kout/graph.hpp"
#include "kout/random.hpp"

namespace kout {

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(static_cast<VertexId>(n - 1), 0);
  return Graph::from_edges(n, edges);
}

/// Center 0 joined to `leaves` leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

/// G(n, p): each pair independently present with probability p.
inline Graph gnp_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Two cliques on [0, n/2) and [n/2, n) plus the perfect matching i -- i+n/2.
inline Graph two_cliques_plus_matching(std::size_t n) {
  if (n % 2 != 0 || n < 4) {
    throw Error(ErrorCode::OddOrder, "need even n >= 4, got " + std::to_string(n), n);
  }
  const VertexId half = static_cast<VertexId>(n / 2);
  std::vector<Edge> edges;
  for (VertexId side = 0; side < 2; ++side) {
    const VertexId base = side * half;
    for (VertexId u = 0; u < half; ++u) {
      for (VertexId v = u + 1; v < half; ++v) edges.emplace_back(base + u, base + v);
    }
  }
  for (VertexId i = 0; i < half; ++i) edges.emplace_back(i, i + half);
  return Graph::from_edges(n, edges);
}

/// Degree floor ceil((1/2 + eps) n) of a strong Dirac graph.
inline std::size_t sdg_degree_floor(std::size_t n, double eps) {
  return static_cast<std::size_t>(std::ceil((0.5 + eps) * static_cast<double>(n) - 1e-9));
}

/*
 * Random strong Dirac graph: start from K_n, visit the edges in random
 * order and drop each with probability removal_p provided both endpoints
 * stay at or above the degree floor.
 */
inline Graph random_sdg(std::size_t n, double eps, double removal_p, Rng& rng) {
  const std::size_t floor_degree = sdg_degree_floor(n, eps);
  if (n == 0 || floor_degree > n - 1) {
    throw Error(ErrorCode::InfeasibleDegree,
                "degree floor " + std::to_string(floor_degree) + " exceeds n-1 for n=" +
                    std::to_string(n),
                floor_degree);
  }
  std::vector<Edge> all;
  all.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  if (removal_p <= 0.0) return Graph::from_edges(n, all);

  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::size_t> deg(n, n - 1);
  std::vector<Edge> kept;
  kept.reserve(all.size());
  for (const auto& [u, v] : all) {
    if (deg[u] > floor_degree && deg[v] > floor_degree && bernoulli(rng, removal_p)) {
      --deg[u];
      --deg[v];
    } else {
      kept.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, kept);
}

/// Union of an m-out choice (without replacement) from K_n, symmetrized;
/// minimum degree is at least m.
inline Graph random_min_degree_host(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0 || m > n - 1) {
    throw Error(ErrorCode::InfeasibleDegree,
                "m=" + std::to_string(m) + " exceeds n-1 for n=" + std::to_string(n), m);
  }
  std::vector<Edge> edges;
  edges.reserve(n * m);
  std::vector<VertexId> pool(n - 1);
  for (VertexId v = 0; v < n; ++v) {
    // partial Fisher-Yates over V \ {v}
    for (VertexId i = 0, w = 0; w < n; ++w) {
      if (w != v) pool[i++] = w;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + uniform_below<std::size_t>(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      edges.emplace_back(std::min(v, pool[i]), std::max(v, pool[i]));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace kout
