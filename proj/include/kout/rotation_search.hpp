#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/graph.hpp"
#include "kout/posa.hpp"
#include "kout/random.hpp"

namespace kout {

namespace detail {

enum class SearchGoal { MaximalPath, HamiltonCycle };

/*
 * Rotation-extension walk. Move order at each iteration:
 *   1. extend from the free endpoint (or, after a flip, from the other one);
 *   2. if the endpoints are adjacent and some path vertex has an off-path
 *      neighbor, close the cycle and re-open it through that neighbor;
 *   3. otherwise rotate at a uniformly random valid pivot (costs one unit of
 *      budget).
 * Path length never decreases, so the final path is the best one seen.
 */
class RotationExtension {
 public:
  RotationExtension(const Graph& h, Rng& rng) : h_(h), rng_(rng) {}

  /// Runs from a random vertex of the largest component. Returns true iff
  /// the goal was met (HamiltonCycle: the path spans V and closes).
  bool run(SearchGoal goal, std::size_t budget) {
    const std::size_t n = h_.vertex_count();
    const auto parts = connected_components(h_);
    std::uint32_t largest = 0;
    for (std::uint32_t c = 1; c < parts.count(); ++c) {
      if (parts.sizes[c] > parts.sizes[largest]) largest = c;
    }
    const std::size_t target = parts.sizes[largest];
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (parts.labels[v] == largest) members.push_back(v);
    }
    path_ = PathState(n, {});
    path_.push_back(members[uniform_below(rng_, members.size())]);

    std::size_t rotations = 0;
    for (;;) {
      if (try_extend()) continue;
      flip();
      if (try_extend()) continue;

      const bool closes = path_.size() >= 3 && h_.has_edge(path_.front(), path_.back());
      if (path_.size() == target) {
        if (goal == SearchGoal::MaximalPath) return true;
        if (target == n && closes) return true;
      } else if (closes && try_reopen()) {
        continue;
      }
      if (rotations >= budget) return false;
      if (rng_() & 1) flip();
      if (!try_rotate()) {
        flip();
        if (!try_rotate()) return goal == SearchGoal::MaximalPath;
      }
      ++rotations;
    }
  }

  const PathState& path() const noexcept { return path_; }

 private:
  bool try_extend() {
    scratch_.clear();
    for (VertexId w : h_.neighbors(path_.back())) {
      if (!path_.contains(w)) scratch_.push_back(w);
    }
    if (scratch_.empty()) return false;
    path_.push_back(scratch_[uniform_below(rng_, scratch_.size())]);
    return true;
  }

  void flip() { path_.reverse_suffix(0); }

  bool try_reopen() {
    const auto& order = path_.order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (VertexId w : h_.neighbors(order[i])) {
        if (path_.contains(w)) continue;
        // cycle order[i+1..], order[..i] then out through w
        path_.rotate_cyclic((i + 1) % order.size());
        path_.push_back(w);
        return true;
      }
    }
    return false;
  }

  bool try_rotate() {
    scratch_.clear();
    for (VertexId w : h_.neighbors(path_.back())) {
      const std::size_t t = path_.position(w);
      if (t + 3 <= path_.size()) scratch_.push_back(w);
    }
    if (scratch_.empty()) return false;
    const VertexId pivot = scratch_[uniform_below(rng_, scratch_.size())];
    path_.reverse_suffix(path_.position(pivot) + 1);
    return true;
  }

  const Graph& h_;
  Rng& rng_;
  PathState path_;
  std::vector<VertexId> scratch_;
};

}  // namespace detail

/// Longest path found by rotation-extension within `budget` rotations. The
/// returned path is maximal: neither endpoint has an off-path neighbor.
inline PathState extend_or_rotate_search(const Graph& h, std::size_t budget, Rng& rng) {
  if (h.vertex_count() == 0) return PathState(0, {});
  detail::RotationExtension engine(h, rng);
  engine.run(detail::SearchGoal::MaximalPath, budget);
  return engine.path();
}

/// A Hamilton cycle of h (vertex order, closing edge implied), or nullopt.
/// Any returned cycle has been validated against h.
inline std::optional<std::vector<VertexId>> hamiltonicity_search(const Graph& h, std::size_t budget,
                                                                  Rng& rng) {
  const std::size_t n = h.vertex_count();
  if (n < 3 || h.min_degree() < 2 || !is_connected(h)) return std::nullopt;
  detail::RotationExtension engine(h, rng);
  if (!engine.run(detail::SearchGoal::HamiltonCycle, budget)) return std::nullopt;
  std::vector<VertexId> cycle = engine.path().order();
  if (cycle.size() != n || !is_valid_cycle(h, cycle)) return std::nullopt;
  return cycle;
}

}  // namespace kout
