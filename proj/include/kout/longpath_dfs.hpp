#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kout/graph.hpp"
#include "kout/posa.hpp"
#include "kout/random.hpp"
#include "kout/sampler.hpp"

namespace kout {

enum class RestartRule { Uniform, LowestId };

/// S = exhausted (all k choices made), U = on the stack, T = unvisited.
enum class DfsMark : std::uint8_t { Unvisited, Stacked, Exhausted };

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/*
 * State of the one-edge-at-a-time DFS over a lazily revealed k-out graph.
 * Observers get a const view after every step.
 */
class DfsState {
 public:
  explicit DfsState(std::size_t n) : mark_(n, DfsMark::Unvisited), parent_(n, kNoVertex), slot_(n) {
    unvisited_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      unvisited_[v] = v;
      slot_[v] = v;
    }
  }

  std::size_t vertex_count() const noexcept { return mark_.size(); }
  DfsMark mark(VertexId v) const { return mark_[v]; }
  const std::vector<VertexId>& stack() const noexcept { return stack_; }
  std::size_t exhausted_count() const noexcept { return exhausted_; }
  std::size_t unvisited_count() const noexcept { return unvisited_.size(); }
  std::size_t hits() const noexcept { return hits_; }
  std::size_t restarts() const noexcept { return restarts_; }
  std::size_t draws() const noexcept { return draws_; }
  std::size_t steps() const noexcept { return steps_; }
  /// Vertex whose draw discovered v, or kNoVertex for restart roots and T.
  VertexId parent(VertexId v) const { return parent_[v]; }
  const std::vector<Edge>& tree_edges() const noexcept { return tree_edges_; }
  const std::vector<VertexId>& discovery_order() const noexcept { return discovered_; }
  /// Vertices of degree 0 moved to S without drawing.
  std::size_t exhausted_isolated() const noexcept { return exhausted_isolated_; }

 private:
  friend class DfsExplorer;

  void take_unvisited(VertexId v) {
    const std::size_t i = slot_[v];
    const VertexId last = unvisited_.back();
    unvisited_[i] = last;
    slot_[last] = i;
    unvisited_.pop_back();
    mark_[v] = DfsMark::Stacked;
    stack_.push_back(v);
    discovered_.push_back(v);
  }

  std::vector<DfsMark> mark_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> slot_;
  std::vector<VertexId> unvisited_;
  std::vector<VertexId> stack_;
  std::vector<Edge> tree_edges_;
  std::vector<VertexId> discovered_;
  std::size_t exhausted_ = 0;
  std::size_t exhausted_isolated_ = 0;
  std::size_t hits_ = 0;
  std::size_t restarts_ = 0;
  std::size_t draws_ = 0;
  std::size_t steps_ = 0;
  VertexId lowest_probe_ = 0;
};

struct DfsStep {
  std::size_t step = 0;
  std::size_t exhausted = 0;  // |S|
  std::size_t stacked = 0;    // |U|
  std::size_t unvisited = 0;  // |T|
  std::size_t hits = 0;
  std::size_t restarts = 0;
  std::size_t draws = 0;
};

struct DfsOptions {
  RestartRule restart = RestartRule::Uniform;
  bool record_trace = false;
  /// Stop as soon as |U| reaches this many vertices (0: never).
  std::size_t stop_at_stack = 0;
  std::function<void(const DfsState&)> observer;
};

struct DfsRun {
  PathState best_path;  // longest stack seen, bottom to top
  DfsStep final_state;
  std::vector<DfsStep> trace;
  std::vector<Edge> tree_edges;
  std::vector<VertexId> discovery_order;
  bool reached_stop = false;
};

/*
 * One DFS per explorer. Each step: if U is empty, restart from a T-vertex;
 * if the top of U has spent its k choices (or has no neighbors), move it to
 * S; otherwise it draws one neighbor w, and w moves from T to the top of U
 * when it is unvisited (a hit). Stops at the draw budget, at the optional
 * stack target, or when S = V.
 */
class DfsExplorer {
 public:
  DfsExplorer(ChoiceOracle& oracle, ColorId color, Rng& rng)
      : oracle_(oracle), color_(color), k_(oracle.spec().multiplicity(color)), rng_(rng),
        state_(oracle.host().vertex_count()) {}

  DfsRun run(std::size_t budget, const DfsOptions& options) {
    const Graph& g = oracle_.host();
    DfsRun out;
    out.best_path = PathState(g.vertex_count(), {});
    auto& st = state_;

    while (st.draws_ < budget && (st.exhausted_ < st.vertex_count())) {
      if (st.stack_.empty()) {
        st.take_unvisited(pick_restart(options.restart));
        ++st.restarts_;
      } else {
        const VertexId top = st.stack_.back();
        if (oracle_.used(top, color_) >= k_ || g.degree(top) == 0) {
          if (g.degree(top) == 0) ++st.exhausted_isolated_;
          st.stack_.pop_back();
          st.mark_[top] = DfsMark::Exhausted;
          ++st.exhausted_;
        } else {
          const VertexId w = oracle_.draw(top, color_);
          ++st.draws_;
          if (st.mark_[w] == DfsMark::Unvisited) {
            st.take_unvisited(w);
            st.parent_[w] = top;
            st.tree_edges_.emplace_back(top, w);
            ++st.hits_;
          }
        }
      }
      ++st.steps_;
      if (st.stack_.size() > out.best_path.size()) {
        out.best_path = PathState(g.vertex_count(), st.stack_);
      }
      if (options.record_trace) out.trace.push_back(snapshot());
      if (options.observer) options.observer(st);
      if (options.stop_at_stack != 0 && st.stack_.size() >= options.stop_at_stack) {
        out.reached_stop = true;
        break;
      }
    }
    out.final_state = snapshot();
    out.tree_edges = st.tree_edges_;
    out.discovery_order = st.discovered_;
    return out;
  }

  const DfsState& state() const noexcept { return state_; }

 private:
  VertexId pick_restart(RestartRule rule) {
    auto& st = state_;
    if (rule == RestartRule::LowestId) {
      while (st.mark_[st.lowest_probe_] != DfsMark::Unvisited) ++st.lowest_probe_;
      return st.lowest_probe_;
    }
    return st.unvisited_[uniform_below(rng_, st.unvisited_.size())];
  }

  DfsStep snapshot() const {
    const auto& st = state_;
    return {st.steps_, st.exhausted_, st.stack_.size(), st.unvisited_.size(),
            st.hits_,  st.restarts_,  st.draws_};
  }

  ChoiceOracle& oracle_;
  ColorId color_;
  std::size_t k_;
  Rng& rng_;
  DfsState state_;
};

/// DFS over a fresh with-replacement k-out oracle seeded from rng.
inline DfsRun dfs_long_path(const Graph& g, std::size_t k, std::size_t budget, Rng& rng,
                            const DfsOptions& options = {}) {
  ChoiceOracle oracle(g, ColorSpec::single(k), Mode::WithReplacement, rng());
  DfsExplorer explorer(oracle, colors::kDefault, rng);
  return explorer.run(budget, options);
}

/// Stack profile as CSV rows: step,S,U,T,hits,restarts,draws.
inline void write_trace_csv(std::ostream& os, const std::vector<DfsStep>& trace) {
  os << "step,S,U,T,hits,restarts,draws\n";
  for (const auto& s : trace) {
    os << s.step << ',' << s.exhausted << ',' << s.stacked << ',' << s.unvisited << ',' << s.hits << ','
       << s.restarts << ',' << s.draws << '\n';
  }
}

struct LongPathTrialResult {
  std::size_t m = 0;
  std::size_t budget = 0;
  std::size_t achieved_length = 0;  // edges of the best stack path
  double target = 0.0;              // (1 - 2 eps) m
  bool success = false;
  bool k_meets_bound = false;       // k >= ceil(2 / eps^2)
};

inline std::size_t long_path_budget(double eps, std::size_t k, std::size_t m) {
  return static_cast<std::size_t>(std::floor(eps * static_cast<double>(k) * static_cast<double>(m) + 1e-9));
}

/// Runs the DFS with budget floor(eps k m) and compares the best path
/// against (1 - 2 eps) m. m defaults to the host's minimum degree.
inline LongPathTrialResult theorem3_trial(const Graph& g, std::size_t k, double eps, Rng& rng,
                                     std::optional<std::size_t> m = std::nullopt) {
  LongPathTrialResult out;
  out.m = m.value_or(g.min_degree());
  out.budget = long_path_budget(eps, k, out.m);
  out.target = (1.0 - 2.0 * eps) * static_cast<double>(out.m);
  out.k_meets_bound = static_cast<double>(k) >= std::ceil(2.0 / (eps * eps) - 1e-9);
  const auto run = dfs_long_path(g, k, out.budget, rng);
  out.achieved_length = run.best_path.length();
  out.success = static_cast<double>(out.achieved_length) >= out.target;
  return out;
}

}  // namespace kout
