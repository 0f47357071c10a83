#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kout/error.hpp"

namespace kout {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/*
 * Undirected simple graph on vertices 0..n-1. Adjacency lists are strictly
 * sorted and symmetric; the graph is immutable once built.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds from an edge list. Duplicate edges (in either orientation) are
  /// rejected when `strict`, silently coalesced otherwise. Self-loops and
  /// out-of-range ids always throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, bool strict = false) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw Error(ErrorCode::BadVertex,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range",
                    std::max(u, v));
      }
      if (u == v) {
        throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u), u);
      }
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (VertexId v = 0; v < n; ++v) {
      auto& list = g.adj_[v];
      std::sort(list.begin(), list.end());
      auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end()) {
        if (strict) {
          throw Error(ErrorCode::DuplicateEdge,
                      "duplicate edge {" + std::to_string(v) + "," + std::to_string(*dup) + "}",
                      v);
        }
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
    }
    for (const auto& list : g.adj_) g.edge_count_ += list.size();
    g.edge_count_ /= 2;
    return g;
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check(v);
    return adj_[v];
  }

  std::size_t degree(VertexId v) const {
    check(v);
    return adj_[v].size();
  }

  bool has_edge(VertexId u, VertexId v) const {
    check(u);
    check(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const VertexId other = &a == &adj_[u] ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
  }

  /// Minimum degree; 0 for the empty graph.
  std::size_t min_degree() const noexcept {
    if (adj_.empty()) return 0;
    std::size_t best = adj_[0].size();
    for (const auto& list : adj_) best = std::min(best, list.size());
    return best;
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u) {
      for (VertexId v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void check(VertexId v) const {
    if (v >= adj_.size()) {
      throw Error(ErrorCode::BadVertex,
                  "vertex " + std::to_string(v) + " not in [0," + std::to_string(adj_.size()) + ")",
                  v);
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

inline std::size_t min_degree(const Graph& g) { return g.min_degree(); }
inline std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }
inline bool has_edge(const Graph& g, VertexId u, VertexId v) { return g.has_edge(u, v); }

/// Sorted N(u) ∩ N(v).
inline std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Vertex-induced subgraph keeping the original ids; edges touching a
/// vertex outside `keep` are dropped. `keep` is a per-vertex mask.
inline Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v]) kept.emplace_back(u, v);
  }
  return Graph::from_edges(g.vertex_count(), kept);
}

}  // namespace kout
