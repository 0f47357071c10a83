#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "kout/graph.hpp"

namespace kout {

struct ComponentPartition {
  std::vector<std::uint32_t> labels;  // per vertex
  std::vector<std::size_t> sizes;     // per component

  std::size_t count() const noexcept { return sizes.size(); }
};

/// Components of the subgraph induced by vertices with `active[v]`; inactive
/// vertices get label UINT32_MAX. An empty mask means all vertices.
inline ComponentPartition connected_components(const Graph& g,
                                               const std::vector<bool>& active = {}) {
  const std::size_t n = g.vertex_count();
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  ComponentPartition out;
  out.labels.assign(n, kNone);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (out.labels[s] != kNone || (!active.empty() && !active[s])) continue;
    const auto label = static_cast<std::uint32_t>(out.sizes.size());
    out.labels[s] = label;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (out.labels[w] == kNone && (active.empty() || active[w])) {
          out.labels[w] = label;
          queue.push_back(w);
        }
      }
    }
    out.sizes.push_back(queue.size());
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).count() == 1;
}

inline std::vector<VertexId> isolated_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

namespace detail {

/*
 * Unit vertex-capacity flow network: v splits into in(v)=2v -> out(v)=2v+1
 * with capacity 1; each host edge {u,w} becomes out(u)->in(w) and
 * out(w)->in(u) with unbounded capacity. Max flow from out(s) to in(t)
 * equals the number of internally vertex-disjoint s-t paths.
 */
class VertexSplitNetwork {
 public:
  explicit VertexSplitNetwork(const Graph& g) : nodes_(2 * g.vertex_count()), head_(nodes_, -1) {
    const int big = static_cast<int>(g.vertex_count()) + 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, w] : g.edges()) {
      add_arc(2 * u + 1, 2 * w, big);
      add_arc(2 * w + 1, 2 * u, big);
    }
    base_cap_ = cap_;
  }

  /// Number of vertex-disjoint s-t paths, stopping early at `limit`.
  std::size_t local_connectivity(VertexId s, VertexId t, std::size_t limit) {
    cap_ = base_cap_;
    const int source = static_cast<int>(2 * s + 1);
    const int sink = static_cast<int>(2 * t);
    std::size_t flow = 0;
    std::vector<int> via(nodes_);
    std::vector<int> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      queue.assign(1, source);
      via[source] = -2;
      bool reached = false;
      for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
        const int x = queue[qi];
        for (int a = head_[x]; a != -1; a = next_[a]) {
          const int y = to_[a];
          if (cap_[a] > 0 && via[y] == -1) {
            via[y] = a;
            if (y == sink) {
              reached = true;
              break;
            }
            queue.push_back(y);
          }
        }
      }
      if (!reached) break;
      for (int y = sink; y != source;) {
        const int a = via[y];
        cap_[a] -= 1;
        cap_[a ^ 1] += 1;
        y = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int from, int to, int cap) {
    for (int pass = 0; pass < 2; ++pass) {
      to_.push_back(pass == 0 ? to : from);
      cap_.push_back(pass == 0 ? cap : 0);
      next_.push_back(head_[pass == 0 ? from : to]);
      head_[pass == 0 ? from : to] = static_cast<int>(to_.size()) - 1;
    }
  }

  std::size_t nodes_;
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> next_;
  std::vector<int> cap_;
  std::vector<int> base_cap_;
};

/// min(kappa(g), limit), scanning sources v_0..v_best against every
/// non-adjacent partner. Some v_i with i <= kappa avoids a minimum separator.
inline std::size_t connectivity_up_to(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  std::size_t best = std::min(limit, g.min_degree());
  if (best == 0) return 0;
  VertexSplitNetwork net(g);
  for (VertexId i = 0; i < n && i <= best; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      best = std::min(best, net.local_connectivity(i, j, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

}  // namespace detail

/// Vertex connectivity; K_n gives n-1 by convention.
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  return detail::connectivity_up_to(g, n - 1);
}

/// True iff n >= k+1 and no set of fewer than k vertices disconnects g.
inline bool is_k_connected(const Graph& g, std::size_t k) {
  if (g.vertex_count() < k + 1) return false;
  if (k == 0) return true;
  return detail::connectivity_up_to(g, k) >= k;
}

}  // namespace kout
