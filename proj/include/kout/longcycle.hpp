#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kout/error.hpp"
#include "kout/exploration_tree.hpp"
#include "kout/graph.hpp"
#include "kout/longpath_dfs.hpp"
#include "kout/posa.hpp"
#include "kout/random.hpp"
#include "kout/sampler.hpp"

namespace kout {

/// Light-red: odd length ending 0. Dark-red: even, 0. Light-blue: odd, 1.
/// Dark-blue: even, 1.
inline ColorId epoch_color(std::string_view id) {
  if (id.empty() || id.find_first_not_of("01") != std::string_view::npos) {
    throw Error(ErrorCode::BadId, "epoch id must be a nonempty binary string, got '" + std::string(id) + "'");
  }
  const bool odd = id.size() % 2 == 1;
  if (id.back() == '0') return odd ? colors::kLightRed : colors::kDarkRed;
  return odd ? colors::kLightBlue : colors::kDarkBlue;
}

inline const char* color_name(ColorId c) {
  switch (c) {
    case colors::kLightRed: return "light-red";
    case colors::kDarkRed: return "dark-red";
    case colors::kLightBlue: return "light-blue";
    case colors::kDarkBlue: return "dark-blue";
  }
  return "unknown";
}

enum class VertexClass : std::uint8_t { A, B, C };
enum class EpochOutcome { Pending, Success, Fail, InterruptB, InterruptC };
enum class Provenance { None, FromC, FromB };

inline const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::A: return "A";
    case VertexClass::B: return "B";
    case VertexClass::C: return "C";
  }
  return "?";
}

inline const char* to_string(EpochOutcome o) {
  switch (o) {
    case EpochOutcome::Pending: return "Pending";
    case EpochOutcome::Success: return "Success";
    case EpochOutcome::Fail: return "Fail";
    case EpochOutcome::InterruptB: return "InterruptB";
    case EpochOutcome::InterruptC: return "InterruptC";
  }
  return "?";
}

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::None: return "None";
    case Provenance::FromC: return "FromC";
    case Provenance::FromB: return "FromB";
  }
  return "?";
}

namespace detail {
inline std::size_t floor_count(double x) {
  return x <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(x + 1e-9));
}
inline std::size_t ceil_count(double x) {
  return x <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(x - 1e-9));
}
}  // namespace detail

/*
 * Integer thresholds derived from (eps, k, m). Cardinalities scaled by eps
 * are floored (and kept >= 1 where a zero would make a rule vacuous);
 * success and distance thresholds are ceilinged.
 */
struct EpochThresholds {
  double eps = 0.0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t step_budget = 0;  // max(1, floor(eps k m)) draws
  std::size_t success = 0;      // ceil((1 - 2 eps) m) A-vertices
  std::size_t interrupt = 0;    // max(1, floor(eps m)) B- or C-vertices
  std::size_t seeds = 0;        // max(1, floor(3 eps m))
  std::size_t far = 0;          // max(2, ceil((1 - 19 eps) m)) tree distance
  std::size_t vset = 0;         // max(1, floor(eps m))
  std::size_t w_size = 0;       // max(2, ceil(eps^2 m))
  std::size_t segment = 0;      // max(1, ceil(eps m / 2))
  double target = 0.0;          // (1 - 19 eps) m
  double good = 0.0;            // (1 - 17 eps) m
  double rest_bound = 0.0;      // 3 eps m

  static EpochThresholds make(double eps, std::size_t k, std::size_t m) {
    using detail::ceil_count;
    using detail::floor_count;
    const double md = static_cast<double>(m);
    EpochThresholds t;
    t.eps = eps;
    t.k = k;
    t.m = m;
    t.step_budget = std::max<std::size_t>(1, floor_count(eps * static_cast<double>(k) * md));
    t.success = std::max<std::size_t>(1, ceil_count((1.0 - 2.0 * eps) * md));
    t.interrupt = std::max<std::size_t>(1, floor_count(eps * md));
    t.seeds = std::max<std::size_t>(1, floor_count(3.0 * eps * md));
    t.far = std::max<std::size_t>(2, ceil_count((1.0 - 19.0 * eps) * md));
    t.vset = std::max<std::size_t>(1, floor_count(eps * md));
    t.w_size = std::max<std::size_t>(2, ceil_count(eps * eps * md));
    t.segment = std::max<std::size_t>(1, ceil_count(eps * md / 2.0));
    t.target = (1.0 - 19.0 * eps) * md;
    t.good = (1.0 - 17.0 * eps) * md;
    t.rest_bound = 3.0 * eps * md;
    return t;
  }
};

/// A if fewer than (1 - 2 eps) d_G(v) neighbors are in the tree; else C if
/// at least eps d_G(v) neighbors are co-tree at distance >= th.far; else B.
inline VertexClass classify(const Graph& g, const ExplorationTree& tree, VertexId v, const EpochThresholds& th) {
  const double d = static_cast<double>(g.degree(v));
  std::size_t in_tree = 0;
  for (VertexId w : g.neighbors(v)) in_tree += tree.contains(w) ? 1 : 0;
  if (static_cast<double>(in_tree) < (1.0 - 2.0 * th.eps) * d) return VertexClass::A;
  std::size_t far = 0;
  for (VertexId w : g.neighbors(v)) {
    const auto dist = tree.distance(v, w);
    if (dist && *dist >= th.far) ++far;
  }
  return static_cast<double>(far) >= th.eps * d ? VertexClass::C : VertexClass::B;
}

struct Epoch {
  std::string id;
  ColorId color = colors::kLightRed;
  std::vector<VertexId> seeds;
  std::vector<VertexId> a, b, c;       // classification order
  std::vector<VertexId> discovered;    // vertices first attached in this epoch
  std::vector<VertexId> path;          // P: tree path of stacked A-vertices
  std::vector<VertexId> rest;          // R = discovered \ P
  std::size_t steps_used = 0;          // draws
  std::size_t max_stack = 0;
  EpochOutcome outcome = EpochOutcome::Pending;
  bool rest_bound_ok = true;           // |R| < 3 eps m, checked on success
};

struct CycleResult {
  std::optional<std::vector<VertexId>> cycle;  // closing edge implied
  std::size_t length = 0;                      // edges
  Provenance provenance = Provenance::None;
  double target = 0.0;

  bool success() const { return cycle.has_value() && static_cast<double>(length) >= target; }
};

/// Undirected edges revealed by a draw log.
class RevealedEdges {
 public:
  explicit RevealedEdges(std::span<const Draw> log) {
    for (const auto& d : log) keys_.insert(key(d.vertex, d.chosen));
  }
  bool contains(VertexId u, VertexId v) const { return keys_.count(key(u, v)) != 0; }

 private:
  static std::uint64_t key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  std::unordered_set<std::uint64_t> keys_;
};

/// Simple, host edges only, every edge revealed.
inline bool is_revealed_cycle(const Graph& g, const RevealedEdges& revealed, std::span<const VertexId> cycle) {
  if (!is_valid_cycle(g, cycle)) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!revealed.contains(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

namespace detail {
inline void keep_longer(CycleResult& best, std::vector<VertexId> cycle, Provenance p) {
  if (!best.cycle || cycle.size() > best.length) {
    best.length = cycle.size();
    best.cycle = std::move(cycle);
    best.provenance = p;
  }
}
inline void drop_unrevealed(const Graph& g, const ChoiceOracle& oracle, CycleResult& r) {
  if (!r.cycle) return;
  const RevealedEdges revealed(oracle.log());
  if (!is_revealed_cycle(g, revealed, *r.cycle)) {
    r.cycle.reset();
    r.length = 0;
    r.provenance = Provenance::None;
  }
}
}  // namespace detail

/// Each v in c_set spends its remaining `color` budget; a draw w at tree
/// distance >= th.far closes tree-path(v, w) + {w, v} into a cycle.
inline CycleResult close_from_C(const Graph& g, const ExplorationTree& tree, std::span<const VertexId> c_set,
                                ColorId color, ChoiceOracle& oracle, const EpochThresholds& th) {
  CycleResult best;
  best.target = th.target;
  for (VertexId v : c_set) {
    while (oracle.remaining(v, color) > 0) {
      const VertexId w = oracle.draw(v, color);
      const auto dist = tree.distance(v, w);
      if (!dist || *dist < th.far) continue;
      auto cycle = tree.path(v, w);
      if (is_valid_cycle(g, cycle)) detail::keep_longer(best, std::move(cycle), Provenance::FromC);
    }
  }
  detail::drop_unrevealed(g, oracle, best);
  return best;
}

struct BLineage {
  const Epoch* parent = nullptr;   // epoch i'
  const Epoch* sibling = nullptr;  // epoch i'0
  std::span<const VertexId> seeds;
};

struct GoodVertexDiag {
  VertexId v = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  bool constructed = false;  // n1, n2 >= 2 |V_j|
  bool good = false;
  VertexId rho = 0;
  VertexId v1 = 0, v2 = 0, v3 = 0;
  double score = 0.0;
};

struct BClosure {
  CycleResult result;
  std::vector<VertexId> w;
  std::vector<GoodVertexDiag> diagnostics;
};

/*
 * W: B-vertices bucketed by their ancestor at the segment boundary above
 * them, so members of a bucket are within ~eps m of each other. Each
 * w in W draws its remaining budget; it is good when some draws
 * v1 in V1, v2 in V2 (first/last |V| neighbors on P_{i'} in discovery order)
 * and v3 in V3 (last |V| neighbors on P_{i'0}), seeds excluded, satisfy
 *   d(v1, v2) + d(v3, seeds) + d(rho_w, w) >= (1 - 17 eps) m.
 * Two good u, v give (u, u1 .. v2, v, v3 .. rho_u .. u).
 */
inline BClosure close_from_B(const Graph& g, const ExplorationTree& tree, std::span<const VertexId> b_set,
                             const BLineage& lineage, ColorId color, ChoiceOracle& oracle,
                             const EpochThresholds& th) {
  if (lineage.parent == nullptr || lineage.sibling == nullptr) {
    throw Error(ErrorCode::MissingLineage, "B-closure needs the parent and sibling epoch paths");
  }
  BClosure out;
  out.result.target = th.target;

  std::map<std::pair<std::size_t, VertexId>, std::vector<VertexId>> buckets;
  for (VertexId v : b_set) {
    const std::size_t cut = tree.depth(v) / th.segment * th.segment;
    const VertexId anc = tree.ancestor_at_depth(v, cut);
    buckets[{tree.order_index(anc), anc}].push_back(v);
  }
  const std::vector<VertexId>* largest = nullptr;
  for (const auto& [key, members] : buckets) {
    if (largest == nullptr || members.size() > largest->size()) largest = &members;
  }
  if (largest == nullptr) return out;
  out.w.assign(largest->begin(), largest->begin() + static_cast<std::ptrdiff_t>(std::min(th.w_size, largest->size())));

  const std::size_t n = g.vertex_count();
  std::vector<bool> is_seed(n, false), on_parent(n, false), on_sibling(n, false);
  for (VertexId s : lineage.seeds) is_seed[s] = true;
  for (VertexId x : lineage.parent->path) on_parent[x] = true;
  for (VertexId x : lineage.sibling->path) on_sibling[x] = true;

  auto seed_distance = [&](VertexId x) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (VertexId s : lineage.seeds) {
      const auto d = tree.distance(x, s);
      if (d && (!best || *d < *best)) best = d;
    }
    return best;
  };
  auto by_discovery = [&](VertexId x, VertexId y) { return tree.order_index(x) < tree.order_index(y); };

  std::vector<GoodVertexDiag> good;
  for (VertexId v : out.w) {
    std::vector<VertexId> draws;
    while (oracle.remaining(v, color) > 0) draws.push_back(oracle.draw(v, color));

    GoodVertexDiag diag;
    diag.v = v;
    std::optional<std::size_t> rho_dist;
    for (VertexId s : lineage.seeds) {
      const auto d = tree.distance(v, s);
      if (d && (!rho_dist || *d < *rho_dist || (*d == *rho_dist && s < diag.rho))) {
        rho_dist = d;
        diag.rho = s;
      }
    }
    std::vector<VertexId> n1, n2;
    for (VertexId w : g.neighbors(v)) {
      if (is_seed[w] || !tree.contains(w)) continue;
      if (on_parent[w]) n1.push_back(w);
      if (on_sibling[w]) n2.push_back(w);
    }
    std::sort(n1.begin(), n1.end(), by_discovery);
    std::sort(n2.begin(), n2.end(), by_discovery);
    diag.n1 = n1.size();
    diag.n2 = n2.size();
    diag.constructed = rho_dist.has_value() && n1.size() >= 2 * th.vset && n2.size() >= 2 * th.vset;
    if (diag.constructed) {
      const std::span<const VertexId> all1(n1), all2(n2);
      const auto v1_set = all1.first(th.vset);
      const auto v2_set = all1.last(th.vset);
      const auto v3_set = all2.last(th.vset);
      auto drawn_from = [&](std::span<const VertexId> set) {
        std::vector<VertexId> hits;
        for (VertexId x : draws) {
          if (std::find(set.begin(), set.end(), x) != set.end()) hits.push_back(x);
        }
        return hits;
      };
      const auto d1 = drawn_from(v1_set), d2 = drawn_from(v2_set), d3 = drawn_from(v3_set);
      std::optional<double> best_score;
      for (VertexId a : d1) {
        for (VertexId b : d2) {
          const auto dab = tree.distance(a, b);
          if (!dab) continue;
          for (VertexId c : d3) {
            const auto dc = seed_distance(c);
            if (!dc) continue;
            const double score = static_cast<double>(*dab + *dc + *rho_dist);
            if (!best_score || score > *best_score) {
              best_score = score;
              diag.v1 = a;
              diag.v2 = b;
              diag.v3 = c;
            }
          }
        }
      }
      diag.score = best_score.value_or(0.0);
      diag.good = best_score && *best_score >= th.good;
    }
    if (diag.good) good.push_back(diag);
    out.diagnostics.push_back(diag);
  }

  for (const auto& u : good) {
    for (const auto& v : good) {
      if (u.v == v.v) continue;
      std::vector<VertexId> cycle{u.v};
      const auto seg1 = tree.path(u.v1, v.v2);
      cycle.insert(cycle.end(), seg1.begin(), seg1.end());
      cycle.push_back(v.v);
      const auto seg2 = tree.path(v.v3, u.rho);
      cycle.insert(cycle.end(), seg2.begin(), seg2.end());
      const auto seg3 = tree.path(u.rho, u.v);
      if (seg3.size() >= 2) cycle.insert(cycle.end(), seg3.begin() + 1, seg3.end() - 1);
      if (seg1.empty() || seg2.empty() || seg3.empty()) continue;
      if (is_valid_cycle(g, cycle)) detail::keep_longer(out.result, std::move(cycle), Provenance::FromB);
    }
  }
  detail::drop_unrevealed(g, oracle, out.result);
  return out;
}

struct LongCycleOptions {
  RestartRule restart = RestartRule::Uniform;
  std::size_t max_epochs = 1u << 16;
};

struct LongCycleRun {
  CycleResult result;
  EpochThresholds thresholds;
  std::vector<Epoch> epochs;            // execution order
  std::optional<std::string> interrupted_at;
  bool fallback_used = false;
  std::vector<GoodVertexDiag> b_diagnostics;
  std::vector<Draw> log;                // every revealed choice
};

/*
 * Epoch-scheduled exploration over a four-color with-replacement oracle.
 * The root epoch "0" is a light-red DFS; each successful epoch spawns
 * i0 and i1 seeded with its last `seeds` discoveries. Epochs run in
 * lexicographic id order. The first interrupt triggers its closure and
 * ends the search.
 */
class LongCycleSearch {
 public:
  LongCycleSearch(const Graph& g, std::size_t k, double eps, std::size_t m, std::uint64_t seed,
                  LongCycleOptions options = {})
      : g_(g),
        th_(EpochThresholds::make(eps, k, m)),
        oracle_(g, ColorSpec::four_colors(k), Mode::WithReplacement, seed),
        tree_(g.vertex_count()),
        rng_(mix64(seed ^ 0x5bd1e995u)),
        options_(options) {}

  LongCycleRun run() {
    LongCycleRun out;
    out.thresholds = th_;
    out.result.target = th_.target;
    std::set<std::string> pending;

    run_root();
    if (epochs_.back().outcome == EpochOutcome::Success) spawn(epochs_.back(), pending);

    while (!pending.empty() && !interrupt_ && epochs_.size() < options_.max_epochs) {
      const std::string id = *pending.begin();
      pending.erase(pending.begin());
      const Epoch& parent = epoch(id.substr(0, id.size() - 1));
      std::vector<VertexId> seeds = last_discoveries(parent);
      run_epoch(id, std::move(seeds));
      if (epochs_.back().outcome == EpochOutcome::Success) spawn(epochs_.back(), pending);
    }

    if (interrupt_) {
      const Epoch& e = epochs_[*interrupt_];
      out.interrupted_at = e.id;
      if (e.outcome == EpochOutcome::InterruptC) {
        out.result = close_from_C(g_, tree_, e.c, e.color, oracle_, th_);
      } else if (e.id.back() == '1') {
        const std::string base = e.id.substr(0, e.id.size() - 1);
        BLineage lineage{find(base), find(base + "0"), e.seeds};
        auto closure = close_from_B(g_, tree_, e.b, lineage, e.color, oracle_, th_);
        out.result = std::move(closure.result);
        out.b_diagnostics = std::move(closure.diagnostics);
      }
    } else {
      out.fallback_used = true;
      for (const Epoch& e : epochs_) {
        if (e.c.empty()) continue;
        auto r = close_from_C(g_, tree_, e.c, e.color, oracle_, th_);
        if (r.cycle) detail::keep_longer(out.result, std::move(*r.cycle), Provenance::FromC);
      }
    }
    out.epochs = epochs_;
    out.log = oracle_.log();
    return out;
  }

  const ExplorationTree& tree() const noexcept { return tree_; }
  /// Mutable access for building epoch fixtures before run_epoch.
  ExplorationTree& tree() noexcept { return tree_; }
  ChoiceOracle& oracle() noexcept { return oracle_; }
  const EpochThresholds& thresholds() const noexcept { return th_; }

  /*
   * One non-root epoch: classify the seeds (A-seeds form the initial stack),
   * then step until success, an interrupt, an empty stack or the step
   * budget. Interrupts are checked after every classification (C first),
   * success after every A-insertion.
   */
  const Epoch& run_epoch(const std::string& id, std::vector<VertexId> seeds) {
    Epoch e;
    e.id = id;
    e.color = epoch_color(id);
    e.seeds = std::move(seeds);
    std::vector<VertexId> stack;

    auto place = [&](VertexId v) {
      switch (classify(g_, tree_, v, th_)) {
        case VertexClass::A:
          e.a.push_back(v);
          stack.push_back(v);
          break;
        case VertexClass::B: e.b.push_back(v); break;
        case VertexClass::C: e.c.push_back(v); break;
      }
    };
    auto interrupted = [&]() -> bool {
      if (e.c.size() >= th_.interrupt) {
        e.outcome = EpochOutcome::InterruptC;
      } else if (e.b.size() >= th_.interrupt) {
        e.outcome = EpochOutcome::InterruptB;
      } else {
        return false;
      }
      return true;
    };
    auto succeeded = [&]() -> bool {
      if (e.a.size() < th_.success) return false;
      e.outcome = EpochOutcome::Success;
      return true;
    };

    for (VertexId s : e.seeds) {
      place(s);
      if (interrupted() || succeeded()) break;
    }
    const std::size_t k = th_.k;
    while (e.outcome == EpochOutcome::Pending) {
      if (stack.empty() || e.steps_used >= th_.step_budget) {
        e.outcome = EpochOutcome::Fail;
        break;
      }
      const VertexId active = stack.back();
      if (oracle_.used(active, e.color) >= k || g_.degree(active) == 0) {
        stack.pop_back();
        continue;
      }
      const VertexId w = oracle_.draw(active, e.color);
      ++e.steps_used;
      if (tree_.contains(w)) continue;
      tree_.attach(w, active);
      e.discovered.push_back(w);
      place(w);
      e.max_stack = std::max(e.max_stack, stack.size());
      if (interrupted() || succeeded()) break;
    }
    e.max_stack = std::max(e.max_stack, stack.size());
    e.path = tree_chain_suffix(stack);
    finish(e);
    if (e.outcome == EpochOutcome::InterruptB || e.outcome == EpochOutcome::InterruptC) {
      interrupt_ = epochs_.size();
    }
    epochs_.push_back(std::move(e));
    return epochs_.back();
  }

 private:
  void run_root() {
    Epoch e;
    e.id = "0";
    e.color = epoch_color(e.id);
    DfsExplorer dfs(oracle_, e.color, rng_);
    DfsOptions opts;
    opts.restart = options_.restart;
    opts.stop_at_stack = th_.success;
    const auto run = dfs.run(th_.step_budget, opts);
    for (VertexId v : run.discovery_order) {
      const VertexId p = dfs.state().parent(v);
      if (p == kNoVertex) {
        tree_.add_root(v);
      } else {
        tree_.attach(v, p);
      }
      e.discovered.push_back(v);
    }
    for (VertexId v : e.discovered) {
      switch (classify(g_, tree_, v, th_)) {
        case VertexClass::A: e.a.push_back(v); break;
        case VertexClass::B: e.b.push_back(v); break;
        case VertexClass::C: e.c.push_back(v); break;
      }
    }
    e.steps_used = run.final_state.draws;
    e.max_stack = run.best_path.size();
    e.path = run.reached_stop ? dfs.state().stack() : run.best_path.order();
    e.outcome = run.reached_stop ? EpochOutcome::Success : EpochOutcome::Fail;
    finish(e);
    epochs_.push_back(std::move(e));
  }

  /// Longest suffix of the stack in which each vertex is the tree parent of
  /// the next.
  std::vector<VertexId> tree_chain_suffix(const std::vector<VertexId>& stack) const {
    if (stack.empty()) return {};
    std::size_t first = stack.size() - 1;
    while (first > 0 && tree_.parent(stack[first]) == stack[first - 1]) --first;
    return {stack.begin() + static_cast<std::ptrdiff_t>(first), stack.end()};
  }

  void finish(Epoch& e) const {
    std::unordered_set<VertexId> on_path(e.path.begin(), e.path.end());
    for (VertexId v : e.discovered) {
      if (!on_path.count(v)) e.rest.push_back(v);
    }
    if (e.outcome == EpochOutcome::Success) {
      e.rest_bound_ok = static_cast<double>(e.rest.size()) < th_.rest_bound;
    }
  }

  std::vector<VertexId> last_discoveries(const Epoch& e) const {
    const std::size_t take = std::min(th_.seeds, e.discovered.size());
    return {e.discovered.end() - static_cast<std::ptrdiff_t>(take), e.discovered.end()};
  }

  void spawn(const Epoch& e, std::set<std::string>& pending) const {
    pending.insert(e.id + "0");
    pending.insert(e.id + "1");
  }

  const Epoch* find(const std::string& id) const {
    for (const auto& e : epochs_) {
      if (e.id == id && e.outcome == EpochOutcome::Success) return &e;
    }
    return nullptr;
  }

  const Epoch& epoch(const std::string& id) const {
    const Epoch* e = find(id);
    if (e == nullptr) throw Error(ErrorCode::MissingLineage, "epoch " + id + " not completed");
    return *e;
  }

  const Graph& g_;
  EpochThresholds th_;
  ChoiceOracle oracle_;
  ExplorationTree tree_;
  Rng rng_;
  LongCycleOptions options_;
  std::vector<Epoch> epochs_;
  std::optional<std::size_t> interrupt_;
};

/// Long-cycle driver. m defaults to the host's minimum degree.
inline LongCycleRun long_cycle(const Graph& g, std::size_t k, double eps, Rng& rng,
                               std::optional<std::size_t> m = std::nullopt, LongCycleOptions options = {}) {
  LongCycleSearch search(g, k, eps, m.value_or(g.min_degree()), rng(), options);
  return search.run();
}

}  // namespace kout
