#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kout/error.hpp"
#include "kout/graph.hpp"
#include "kout/random.hpp"

namespace kout {

enum class Mode { WithReplacement, WithoutReplacement };

inline const char* to_string(Mode mode) {
  return mode == Mode::WithReplacement ? "with_replacement" : "without_replacement";
}

using ColorId = std::uint8_t;

namespace colors {
inline constexpr ColorId kDefault = 0;
inline constexpr ColorId kGreen = 0;
inline constexpr ColorId kBlue = 1;
inline constexpr ColorId kLightRed = 0;
inline constexpr ColorId kDarkRed = 1;
inline constexpr ColorId kLightBlue = 2;
inline constexpr ColorId kDarkBlue = 3;
}  // namespace colors

struct ColorEntry {
  ColorId id = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const ColorEntry&, const ColorEntry&) = default;
};

/// Per-vertex choice budget for each color.
class ColorSpec {
 public:
  ColorSpec() = default;
  explicit ColorSpec(std::vector<ColorEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].multiplicity == 0) {
        throw Error(ErrorCode::BadMultiplicity,
                    "color " + std::to_string(entries_[i].id) + " has multiplicity 0");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (entries_[j].id == entries_[i].id) {
          throw Error(ErrorCode::BadMultiplicity,
                      "color " + std::to_string(entries_[i].id) + " listed twice");
        }
      }
    }
  }

  static ColorSpec single(std::size_t k, ColorId id = colors::kDefault) {
    return ColorSpec({{id, k}});
  }

  /// Four colors (light red, dark red, light blue, dark blue), k each.
  static ColorSpec four_colors(std::size_t k) {
    return ColorSpec({{colors::kLightRed, k},
                      {colors::kDarkRed, k},
                      {colors::kLightBlue, k},
                      {colors::kDarkBlue, k}});
  }

  std::span<const ColorEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::size_t index_of(ColorId id) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].id == id) return i;
    }
    throw Error(ErrorCode::BadMultiplicity, "unknown color " + std::to_string(id));
  }

  std::size_t multiplicity(ColorId id) const { return entries_[index_of(id)].multiplicity; }

  std::size_t max_multiplicity() const noexcept {
    std::size_t best = 0;
    for (const auto& e : entries_) best = std::max(best, e.multiplicity);
    return best;
  }

  std::size_t total_multiplicity() const noexcept {
    std::size_t total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
  }

  friend bool operator==(const ColorSpec&, const ColorSpec&) = default;

 private:
  std::vector<ColorEntry> entries_;
};

/// Uniform neighbor of v. WithoutReplacement excludes `prior` (distinct
/// earlier picks of the same color) and throws when nothing is left.
inline VertexId draw_neighbor(const Graph& g, VertexId v, Mode mode,
                              std::span<const VertexId> prior, Rng& rng) {
  auto nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  if (mode == Mode::WithReplacement || prior.empty()) {
    if (d == 0) throw Error(ErrorCode::DegreeTooSmall, "vertex " + std::to_string(v) + " has degree 0", v);
    return nbrs[uniform_below(rng, d)];
  }
  if (prior.size() >= d) {
    throw Error(ErrorCode::DegreeTooSmall,
                "vertex " + std::to_string(v) + " has no unused neighbor", v);
  }
  auto taken = [&](VertexId w) { return std::find(prior.begin(), prior.end(), w) != prior.end(); };
  if (2 * prior.size() <= d) {
    for (;;) {
      const VertexId w = nbrs[uniform_below(rng, d)];
      if (!taken(w)) return w;
    }
  }
  std::vector<VertexId> rest;
  rest.reserve(d - prior.size());
  for (VertexId w : nbrs) {
    if (!taken(w)) rest.push_back(w);
  }
  return rest[uniform_below(rng, rest.size())];
}

/*
 * A realized G(k-out) choice table: for every vertex and color, the ordered
 * list of chosen neighbors. Construction validates every invariant against
 * the host graph.
 */
class KOutSample {
 public:
  KOutSample() = default;

  /// `choices[ci]` holds vertex v's picks at [v*k_ci, (v+1)*k_ci).
  KOutSample(const Graph& host, ColorSpec spec, Mode mode,
             std::vector<std::vector<VertexId>> choices)
      : n_(host.vertex_count()), spec_(std::move(spec)), mode_(mode), choices_(std::move(choices)) {
    if (choices_.size() != spec_.size()) {
      throw Error(ErrorCode::BadMultiplicity, "choice table does not match color spec");
    }
    for (std::size_t ci = 0; ci < spec_.size(); ++ci) {
      const std::size_t k = spec_.entries()[ci].multiplicity;
      if (choices_[ci].size() != n_ * k) {
        throw Error(ErrorCode::BadMultiplicity, "per-vertex choice count mismatch");
      }
      for (VertexId v = 0; v < n_; ++v) {
        auto picks = std::span<const VertexId>(choices_[ci]).subspan(v * k, k);
        for (std::size_t j = 0; j < k; ++j) {
          if (picks[j] >= n_ || !host.has_edge(v, picks[j])) {
            throw Error(ErrorCode::BadVertex,
                        "arc (" + std::to_string(v) + "," + std::to_string(picks[j]) +
                            ") is not a host edge",
                        v);
          }
          if (mode_ == Mode::WithoutReplacement &&
              std::find(picks.begin(), picks.begin() + j, picks[j]) != picks.begin() + j) {
            throw Error(ErrorCode::DuplicateEdge,
                        "vertex " + std::to_string(v) + " repeats a choice", v);
          }
        }
      }
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const ColorSpec& spec() const noexcept { return spec_; }
  Mode mode() const noexcept { return mode_; }

  std::span<const VertexId> choices(VertexId v, ColorId color) const {
    const std::size_t ci = spec_.index_of(color);
    const std::size_t k = spec_.entries()[ci].multiplicity;
    return std::span<const VertexId>(choices_[ci]).subspan(v * k, k);
  }

  /// Raw table for color index ci (not id).
  const std::vector<VertexId>& table(std::size_t ci) const { return choices_[ci]; }

  std::size_t total_choices() const noexcept { return n_ * spec_.total_multiplicity(); }

  bool includes(ColorId color, const std::optional<std::vector<ColorId>>& filter) const {
    return !filter || std::find(filter->begin(), filter->end(), color) != filter->end();
  }

  /// Directed arcs (v, w), one per choice, in the filtered colors.
  std::vector<Edge> arcs(const std::optional<std::vector<ColorId>>& filter = std::nullopt) const {
    std::vector<Edge> out;
    for (std::size_t ci = 0; ci < spec_.size(); ++ci) {
      const auto& entry = spec_.entries()[ci];
      if (!includes(entry.id, filter)) continue;
      for (VertexId v = 0; v < n_; ++v) {
        for (std::size_t j = 0; j < entry.multiplicity; ++j) {
          out.emplace_back(v, choices_[ci][v * entry.multiplicity + j]);
        }
      }
    }
    return out;
  }

  friend bool operator==(const KOutSample&, const KOutSample&) = default;

 private:
  std::size_t n_ = 0;
  ColorSpec spec_;
  Mode mode_ = Mode::WithReplacement;
  std::vector<std::vector<VertexId>> choices_;
};

/// First vertex whose degree cannot support the spec, if any.
inline std::optional<VertexId> degree_violation(const Graph& g, const ColorSpec& spec, Mode mode) {
  const std::size_t need = mode == Mode::WithoutReplacement ? spec.max_multiplicity() : 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < need) return v;
  }
  return std::nullopt;
}

inline KOutSample sample_colored(const Graph& g, const ColorSpec& spec, Mode mode, Rng& rng) {
  if (spec.total_multiplicity() > 0) {
    if (auto bad = degree_violation(g, spec, mode)) {
      throw Error(ErrorCode::DegreeTooSmall,
                  "vertex " + std::to_string(*bad) + " has degree " +
                      std::to_string(g.degree(*bad)),
                  *bad);
    }
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> table(spec.size());
  for (std::size_t ci = 0; ci < spec.size(); ++ci) {
    const std::size_t k = spec.entries()[ci].multiplicity;
    auto& picks = table[ci];
    picks.reserve(n * k);
    for (VertexId v = 0; v < n; ++v) {
      const std::size_t start = picks.size();
      for (std::size_t j = 0; j < k; ++j) {
        auto prior = std::span<const VertexId>(picks).subspan(start, j);
        picks.push_back(draw_neighbor(g, v, mode, prior, rng));
      }
    }
  }
  return KOutSample(g, spec, mode, std::move(table));
}

inline KOutSample sample(const Graph& g, std::size_t k, Mode mode, Rng& rng) {
  return sample_colored(g, ColorSpec::single(k), mode, rng);
}

/// Recolors one uniformly chosen choice per vertex blue; the rest stay green.
inline KOutSample split_green_blue(const Graph& host, const KOutSample& s, Rng& rng) {
  if (s.spec().size() != 1 || s.spec().entries()[0].multiplicity < 2) {
    throw Error(ErrorCode::BadMultiplicity, "need a single color with multiplicity >= 2");
  }
  const std::size_t k = s.spec().entries()[0].multiplicity;
  const std::size_t n = s.vertex_count();
  std::vector<VertexId> green;
  std::vector<VertexId> blue;
  green.reserve(n * (k - 1));
  blue.reserve(n);
  const auto& table = s.table(0);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t pick = uniform_below(rng, k);
    for (std::size_t j = 0; j < k; ++j) {
      const VertexId w = table[v * k + j];
      (j == pick ? blue : green).push_back(w);
    }
  }
  return KOutSample(host, ColorSpec({{colors::kGreen, k - 1}, {colors::kBlue, 1}}), s.mode(),
                    {std::move(green), std::move(blue)});
}

/// Undirected simple graph of the chosen pairs (orientation dropped,
/// parallel choices coalesced).
inline Graph underlying_graph(const KOutSample& s,
                              const std::optional<std::vector<ColorId>>& filter = std::nullopt) {
  return Graph::from_edges(s.vertex_count(), s.arcs(filter));
}

/// Chosen out-neighbors of S, minus S. Sorted.
inline std::vector<VertexId> out_neighborhood(
    const KOutSample& s, std::span<const VertexId> set,
    const std::optional<std::vector<ColorId>>& filter = std::nullopt) {
  std::vector<bool> in_set(s.vertex_count(), false);
  for (VertexId v : set) in_set[v] = true;
  std::vector<bool> hit(s.vertex_count(), false);
  std::vector<VertexId> out;
  for (const auto& entry : s.spec().entries()) {
    if (!s.includes(entry.id, filter)) continue;
    for (VertexId v : set) {
      for (VertexId w : s.choices(v, entry.id)) {
        if (!in_set[w] && !hit[w]) {
          hit[w] = true;
          out.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Draw {
  VertexId vertex = 0;
  ColorId color = 0;
  VertexId chosen = 0;

  friend bool operator==(const Draw&, const Draw&) = default;
};

/*
 * Lazily revealed G(k-out) choices. Each draw is uniform over N_G(v)
 * (WithReplacement) or over N_G(v) minus v's earlier picks of the same
 * color (WithoutReplacement). Budgets are per vertex and color; every draw
 * is appended to a chronological log.
 *
 * The oracle keeps a reference to the host; the host must outlive it.
 */
class ChoiceOracle {
 public:
  ChoiceOracle(const Graph& host, ColorSpec spec, Mode mode, std::uint64_t seed)
      : host_(&host), spec_(std::move(spec)), mode_(mode), rng_(seed) {
    const std::size_t n = host.vertex_count();
    picks_.resize(spec_.size());
    for (std::size_t ci = 0; ci < spec_.size(); ++ci) {
      picks_[ci].assign(n, {});
    }
  }

  const Graph& host() const noexcept { return *host_; }
  const ColorSpec& spec() const noexcept { return spec_; }
  Mode mode() const noexcept { return mode_; }

  std::size_t used(VertexId v, ColorId color) const {
    return picks_[spec_.index_of(color)][v].size();
  }
  std::size_t remaining(VertexId v, ColorId color) const {
    return spec_.multiplicity(color) - used(v, color);
  }
  std::span<const VertexId> picks(VertexId v, ColorId color) const {
    return picks_[spec_.index_of(color)][v];
  }

  VertexId draw(VertexId v, ColorId color) {
    host_->check(v);
    const std::size_t ci = spec_.index_of(color);
    auto& mine = picks_[ci][v];
    if (mine.size() >= spec_.entries()[ci].multiplicity) {
      throw Error(ErrorCode::BudgetExhausted,
                  "vertex " + std::to_string(v) + " spent its color-" + std::to_string(color) +
                      " budget",
                  v);
    }
    const VertexId w = draw_neighbor(*host_, v, mode_, mine, rng_);
    mine.push_back(w);
    log_.push_back({v, color, w});
    return w;
  }

  const std::vector<Draw>& log() const noexcept { return log_; }

  /// Pads every unspent budget by drawing, then returns the full table.
  KOutSample freeze() {
    const std::size_t n = host_->vertex_count();
    std::vector<std::vector<VertexId>> table(spec_.size());
    for (std::size_t ci = 0; ci < spec_.size(); ++ci) {
      const auto& entry = spec_.entries()[ci];
      for (VertexId v = 0; v < n; ++v) {
        while (picks_[ci][v].size() < entry.multiplicity) draw(v, entry.id);
        table[ci].insert(table[ci].end(), picks_[ci][v].begin(), picks_[ci][v].end());
      }
    }
    return KOutSample(*host_, spec_, mode_, std::move(table));
  }

 private:
  const Graph* host_;
  ColorSpec spec_;
  Mode mode_;
  Rng rng_;
  std::vector<std::vector<std::vector<VertexId>>> picks_;  // [color index][vertex]
  std::vector<Draw> log_;
};

inline ChoiceOracle make_oracle(const Graph& g, ColorSpec spec, Mode mode, std::uint64_t seed) {
  return ChoiceOracle(g, std::move(spec), mode, seed);
}

}  // namespace kout
