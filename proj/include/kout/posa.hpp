#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/error.hpp"
#include "kout/graph.hpp"

namespace kout {

/*
 * A simple path v_1..v_l with an inverse position index. Positions are
 * 0-based in the API: the 1-based pivot t of the rotation
 * (v_1..v_t, v_l, v_{l-1}..v_{t+1}) is passed as t-1.
 */
class PathState {
 public:
  static constexpr std::uint32_t kOff = std::numeric_limits<std::uint32_t>::max();

  PathState() = default;

  /// `n` is the vertex count of the ambient graph. Throws BadVertex on a
  /// repeated or out-of-range vertex.
  PathState(std::size_t n, std::vector<VertexId> order) : order_(std::move(order)), pos_(n, kOff) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const VertexId v = order_[i];
      if (v >= n || pos_[v] != kOff) {
        throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " repeated or out of range", v);
      }
      pos_[v] = static_cast<std::uint32_t>(i);
    }
  }

  const std::vector<VertexId>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  /// Edge count.
  std::size_t length() const noexcept { return order_.empty() ? 0 : order_.size() - 1; }
  bool empty() const noexcept { return order_.empty(); }
  VertexId front() const { return order_.front(); }
  VertexId back() const { return order_.back(); }
  bool contains(VertexId v) const { return v < pos_.size() && pos_[v] != kOff; }
  std::uint32_t position(VertexId v) const { return pos_[v]; }
  std::size_t universe() const noexcept { return pos_.size(); }

  /// Consecutive vertices adjacent in h.
  bool is_path_in(const Graph& h) const {
    if (pos_.size() != h.vertex_count()) return false;
    for (std::size_t i = 0; i + 1 < order_.size(); ++i) {
      if (!h.has_edge(order_[i], order_[i + 1])) return false;
    }
    return true;
  }

  void push_back(VertexId v) {
    pos_[v] = static_cast<std::uint32_t>(order_.size());
    order_.push_back(v);
  }

  /// Reverses order_[from..end) and fixes positions.
  void reverse_suffix(std::size_t from) {
    std::reverse(order_.begin() + static_cast<std::ptrdiff_t>(from), order_.end());
    for (std::size_t i = from; i < order_.size(); ++i) pos_[order_[i]] = static_cast<std::uint32_t>(i);
  }

  /// Cyclic shift so that order_[first] becomes the front.
  void rotate_cyclic(std::size_t first) {
    std::rotate(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(first), order_.end());
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = static_cast<std::uint32_t>(i);
  }

  friend bool operator==(const PathState& a, const PathState& b) { return a.order_ == b.order_; }

 private:
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> pos_;
};

/// True iff 0-based pivot `t` admits a rotation of p in h: t <= l-3 and
/// {v_l, v_t} is an edge. The cycle-closing pivot t = 0 is allowed.
inline bool is_valid_pivot(const Graph& h, const PathState& p, std::size_t t) {
  return p.size() >= 3 && t + 3 <= p.size() && h.has_edge(p.back(), p.order()[t]);
}

/// (v_1..v_t, v_l, v_{l-1}..v_{t+1}); the new free endpoint is v_{t+1}.
inline PathState rotate(const Graph& h, const PathState& p, std::size_t t) {
  if (!is_valid_pivot(h, p, t)) {
    throw Error(ErrorCode::BadPivot,
                "pivot " + std::to_string(t) + " invalid for path of " + std::to_string(p.size()) +
                    " vertices",
                t);
  }
  PathState out = p;
  out.reverse_suffix(t + 1);
  return out;
}

/*
 * Endpoints reachable from p by rotations that keep p.front() fixed.
 * Breadth-first over path identity: every distinct rotated path is a
 * state, since two paths ending at the same vertex can rotate to different
 * endpoints. `pivots[y]` is the pivot-vertex sequence of the first path found
 * ending at y, so any endpoint's path can be replayed from `initial`. The
 * search stops early once every non-fixed path vertex is an endpoint;
 * `complete` is false when the state cap cut it short.
 */
struct RotationClosure {
  static constexpr std::size_t kMaxStates = std::size_t{1} << 18;

  VertexId fixed = 0;
  PathState initial;
  std::vector<VertexId> endpoints;  // sorted; includes initial.back()
  std::unordered_map<VertexId, std::pair<VertexId, VertexId>> parent;  // (previous endpoint, pivot)
  std::unordered_map<VertexId, std::vector<VertexId>> pivots;
  std::size_t states = 0;
  bool complete = true;

  bool contains(VertexId v) const { return std::binary_search(endpoints.begin(), endpoints.end(), v); }

  /// Path from `fixed` to `endpoint`, replayed from the initial path.
  PathState path_to(const Graph& h, VertexId endpoint) const {
    const auto it = pivots.find(endpoint);
    if (it == pivots.end()) {
      throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(endpoint) + " not in closure", endpoint);
    }
    PathState path = initial;
    for (VertexId pivot : it->second) path = rotate(h, path, path.position(pivot));
    return path;
  }
};

namespace detail {

struct OrderHash {
  std::size_t operator()(const std::vector<VertexId>& order) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (VertexId v : order) h = (h ^ v) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

inline RotationClosure rotation_closure(const Graph& h, const PathState& p) {
  RotationClosure out;
  if (p.empty()) return out;
  out.fixed = p.front();
  out.initial = p;
  out.endpoints.push_back(p.back());
  out.pivots.emplace(p.back(), std::vector<VertexId>{});
  const std::size_t possible = p.size() - 1;

  struct Node {
    std::vector<VertexId> order;
    std::size_t parent;
    VertexId pivot;
  };
  std::vector<Node> nodes{{p.order(), 0, 0}};
  std::unordered_set<std::vector<VertexId>, detail::OrderHash> seen{p.order()};
  auto pivot_chain = [&](std::size_t i) {
    std::vector<VertexId> chain;
    for (; i != 0; i = nodes[i].parent) chain.push_back(nodes[i].pivot);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  for (std::size_t head = 0; head < nodes.size() && out.endpoints.size() < possible; ++head) {
    const PathState cur(h.vertex_count(), nodes[head].order);
    const VertexId x = cur.back();
    for (VertexId w : h.neighbors(x)) {
      if (!cur.contains(w)) continue;
      const std::size_t t = cur.position(w);
      if (t + 3 > cur.size()) continue;
      PathState next = cur;
      next.reverse_suffix(t + 1);
      if (!seen.insert(next.order()).second) continue;
      if (nodes.size() >= RotationClosure::kMaxStates) {
        out.complete = false;
        break;
      }
      nodes.push_back({next.order(), head, w});
      const VertexId y = next.back();
      if (!out.pivots.count(y)) {
        out.endpoints.push_back(y);
        out.parent.emplace(y, std::make_pair(x, w));
        out.pivots.emplace(y, pivot_chain(nodes.size() - 1));
      }
    }
    if (!out.complete) break;
  }
  out.states = nodes.size();
  std::sort(out.endpoints.begin(), out.endpoints.end());
  return out;
}

/// N_H(S): vertices outside S with a neighbor in S. Sorted.
inline std::vector<VertexId> neighborhood(const Graph& h, std::span<const VertexId> set) {
  std::vector<bool> in_set(h.vertex_count(), false);
  for (VertexId v : set) in_set[v] = true;
  std::vector<bool> seen(h.vertex_count(), false);
  std::vector<VertexId> out;
  for (VertexId v : set) {
    for (VertexId w : h.neighbors(v)) {
      if (!in_set[w] && !seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PosaCheck {
  std::size_t endpoint_count = 0;
  std::size_t neighborhood_size = 0;
  bool holds = false;
};

/// |N_H(EP)| <= 2|EP| - 1 for EP = rotation_closure(h, p).endpoints.
/// Meaningful only when p is a longest path of h.
inline PosaCheck posa_bound_details(const Graph& h, const PathState& p) {
  const auto closure = rotation_closure(h, p);
  const auto nbrs = neighborhood(h, closure.endpoints);
  PosaCheck out;
  out.endpoint_count = closure.endpoints.size();
  out.neighborhood_size = nbrs.size();
  out.holds = nbrs.size() + 1 <= 2 * closure.endpoints.size();
  return out;
}

inline bool posa_bound_check(const Graph& h, const PathState& p) { return posa_bound_details(h, p).holds; }

struct LongestPath {
  std::size_t length = 0;  // edges
  PathState path;
};

/// Exact longest simple path by exhaustive DFS; n <= 12.
inline LongestPath brute_force_longest_path(const Graph& h) {
  const std::size_t n = h.vertex_count();
  if (n > 12) throw Error(ErrorCode::TooLarge, "brute force limited to n <= 12, got " + std::to_string(n), n);
  // No path can beat the largest component's vertex count.
  std::size_t ceiling = 0;
  for (std::size_t size : connected_components(h).sizes) ceiling = std::max(ceiling, size);
  std::vector<VertexId> best;
  std::vector<VertexId> stack;
  std::uint32_t visited = 0;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    stack.push_back(v);
    visited |= 1u << v;
    if (stack.size() > best.size()) best = stack;
    for (VertexId w : h.neighbors(v)) {
      if (best.size() == ceiling) break;
      if (!(visited & (1u << w))) self(self, w);
    }
    visited &= ~(1u << v);
    stack.pop_back();
  };
  for (VertexId s = 0; s < n && best.size() < ceiling; ++s) dfs(dfs, s);
  LongestPath out;
  out.length = best.empty() ? 0 : best.size() - 1;
  out.path = PathState(n, best);
  return out;
}

/// Simple cycle through >= 3 distinct vertices using only edges of h.
inline bool is_valid_cycle(const Graph& h, std::span<const VertexId> cycle) {
  if (cycle.size() < 3) return false;
  std::vector<bool> seen(h.vertex_count(), false);
  for (VertexId v : cycle) {
    if (v >= h.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!h.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace kout
