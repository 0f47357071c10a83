#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kout/error.hpp"
#include "kout/graph.hpp"

namespace kout {

/*
 * Rooted forest grown one leaf at a time, with binary-lifting ancestor
 * tables so that LCA and tree distance cost O(log n). Vertices of different
 * roots have no distance.
 */
class ExplorationTree {
 public:
  static constexpr VertexId kAbsent = 0xffffffffu;

  explicit ExplorationTree(std::size_t n)
      : levels_(std::max<std::size_t>(1, std::bit_width(n))),
        up_(levels_, std::vector<VertexId>(n, kAbsent)),
        depth_(n, 0),
        root_(n, kAbsent),
        order_(n, kAbsent) {}

  std::size_t vertex_count() const noexcept { return depth_.size(); }
  bool contains(VertexId v) const { return root_[v] != kAbsent; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<VertexId>& members() const noexcept { return members_; }

  void add_root(VertexId v) {
    insert_check(v);
    root_[v] = v;
    depth_[v] = 0;
    up_[0][v] = v;
    for (std::size_t j = 1; j < levels_; ++j) up_[j][v] = v;
    record(v);
  }

  void attach(VertexId v, VertexId parent) {
    insert_check(v);
    if (!contains(parent)) {
      throw Error(ErrorCode::BadVertex, "parent " + std::to_string(parent) + " not in tree", parent);
    }
    root_[v] = root_[parent];
    depth_[v] = depth_[parent] + 1;
    up_[0][v] = parent;
    for (std::size_t j = 1; j < levels_; ++j) up_[j][v] = up_[j - 1][up_[j - 1][v]];
    record(v);
  }

  std::size_t depth(VertexId v) const { return depth_[v]; }
  VertexId root(VertexId v) const { return root_[v]; }
  std::optional<VertexId> parent(VertexId v) const {
    if (!contains(v) || root_[v] == v) return std::nullopt;
    return up_[0][v];
  }
  /// Insertion (discovery) index.
  std::size_t order_index(VertexId v) const { return order_[v]; }

  VertexId ancestor_at_depth(VertexId v, std::size_t d) const {
    std::size_t lift = depth_[v] - d;
    for (std::size_t j = 0; lift != 0; ++j, lift >>= 1) {
      if (lift & 1) v = up_[j][v];
    }
    return v;
  }

  std::optional<VertexId> lca(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v) || root_[u] != root_[v]) return std::nullopt;
    if (depth_[u] < depth_[v]) std::swap(u, v);
    u = ancestor_at_depth(u, depth_[v]);
    if (u == v) return u;
    for (std::size_t j = levels_; j-- > 0;) {
      if (up_[j][u] != up_[j][v]) {
        u = up_[j][u];
        v = up_[j][v];
      }
    }
    return up_[0][u];
  }

  std::optional<std::size_t> distance(VertexId u, VertexId v) const {
    const auto a = lca(u, v);
    if (!a) return std::nullopt;
    return depth_[u] + depth_[v] - 2 * depth_[*a];
  }

  /// Vertices of the unique u-v tree path, u first. Empty if not co-tree.
  std::vector<VertexId> path(VertexId u, VertexId v) const {
    const auto a = lca(u, v);
    if (!a) return {};
    std::vector<VertexId> up_part;
    for (VertexId x = u; x != *a; x = up_[0][x]) up_part.push_back(x);
    up_part.push_back(*a);
    std::vector<VertexId> down_part;
    for (VertexId x = v; x != *a; x = up_[0][x]) down_part.push_back(x);
    up_part.insert(up_part.end(), down_part.rbegin(), down_part.rend());
    return up_part;
  }

 private:
  void insert_check(VertexId v) const {
    if (v >= vertex_count()) throw Error(ErrorCode::BadVertex, "vertex out of range", v);
    if (contains(v)) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " already in tree", v);
  }

  void record(VertexId v) {
    order_[v] = members_.size();
    members_.push_back(v);
  }

  std::size_t levels_;
  std::vector<std::vector<VertexId>> up_;
  std::vector<std::size_t> depth_;
  std::vector<VertexId> root_;
  std::vector<std::size_t> order_;
  std::vector<VertexId> members_;
};

}  // namespace kout
