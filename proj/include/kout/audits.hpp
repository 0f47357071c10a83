#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/error.hpp"
#include "kout/graph.hpp"
#include "kout/random.hpp"
#include "kout/sampler.hpp"

namespace kout {

// Search modes shared by the subset audits.
struct Exhaustive {};
struct Randomized {
  std::size_t trials = 0;
};
using SearchMode = std::variant<Exhaustive, Randomized>;

inline constexpr double kExhaustiveLimit = 1e6;

/// C(n, r) as a double (exact below 2^53, monotone above).
inline double binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0.0;
  r = std::min(r, n - r);
  double out = 1.0;
  for (std::size_t i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
  return std::round(out);
}

namespace detail {

/// Advances `idx` (strictly increasing, values < n) to the next r-subset in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// r distinct elements of `pool`, uniformly.
inline std::vector<VertexId> random_subset(std::span<const VertexId> pool, std::size_t r, Rng& rng) {
  std::vector<VertexId> work(pool.begin(), pool.end());
  for (std::size_t i = 0; i < r; ++i) {
    std::swap(work[i], work[i + uniform_below(rng, work.size() - i)]);
  }
  work.resize(r);
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Common-neighbor cover

/// Threshold defaults taken from the asymptotic argument: C = 12/eps,
/// p = C ln n / n (capped at 1), pair threshold ceil(12 ln n).
struct CoverParams {
  std::size_t pair_threshold = 0;
  double p = 0.0;
};

inline CoverParams asymptotic_cover_params(std::size_t n, double eps) {
  const double ln_n = std::log(static_cast<double>(n));
  const double c = 12.0 / eps;
  return {static_cast<std::size_t>(std::ceil(12.0 * ln_n)),
          std::min(1.0, c * ln_n / static_cast<double>(n))};
}

struct CoverResult {
  std::vector<VertexId> cover;  // sorted
  std::size_t attempts = 0;
};

/// Number of pairs u < v outside `in_cover` with fewer than `threshold`
/// common neighbors inside the cover.
inline std::size_t cover_pair_failures(const Graph& g, const std::vector<bool>& in_cover,
                                       std::size_t threshold) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> slot(n, 0);
  std::size_t size = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (in_cover[v]) slot[v] = size++;
  }
  const std::size_t words = (size + 63) / 64;
  std::vector<VertexId> outside;
  std::vector<std::uint64_t> bits;
  for (VertexId v = 0; v < n; ++v) {
    if (in_cover[v]) continue;
    outside.push_back(v);
    bits.resize(bits.size() + words, 0);
    std::uint64_t* row = bits.data() + (outside.size() - 1) * words;
    for (VertexId w : g.neighbors(v)) {
      if (in_cover[w]) row[slot[w] / 64] |= std::uint64_t{1} << (slot[w] % 64);
    }
  }
  std::size_t failures = 0;
  for (std::size_t a = 0; a < outside.size(); ++a) {
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < words && common < threshold; ++w) {
        common += static_cast<std::size_t>(std::popcount(bits[a * words + w] & bits[b * words + w]));
      }
      if (common < threshold) ++failures;
    }
  }
  return failures;
}

/*
 * Random cover L: each vertex joins independently with probability p;
 * accepted when every pair outside L has at least `pair_threshold` common
 * neighbors in L. Throws RetriesExhausted (detail = fewest failing pairs
 * over all attempts) when no attempt succeeds.
 */
inline CoverResult common_neighbor_cover(const Graph& g, std::size_t pair_threshold, double p,
                                         std::size_t max_retries, Rng& rng) {
  const std::size_t n = g.vertex_count();
  std::size_t best_failures = std::numeric_limits<std::size_t>::max();
  for (std::size_t attempt = 1; attempt <= max_retries; ++attempt) {
    std::vector<bool> in_cover(n, false);
    for (VertexId v = 0; v < n; ++v) in_cover[v] = bernoulli(rng, p);
    const std::size_t failures = cover_pair_failures(g, in_cover, pair_threshold);
    best_failures = std::min(best_failures, failures);
    if (failures != 0) continue;

    CoverResult out;
    out.attempts = attempt;
    for (VertexId v = 0; v < n; ++v) {
      if (in_cover[v]) out.cover.push_back(v);
    }
    // Re-check by sorted-list intersection, independent of the bitset count.
    for (VertexId u = 0; u < n; ++u) {
      if (in_cover[u]) continue;
      for (VertexId v = u + 1; v < n; ++v) {
        if (in_cover[v]) continue;
        const auto common = common_neighbors(g, u, v);
        const auto inside = std::count_if(common.begin(), common.end(),
                                          [&](VertexId w) { return in_cover[w]; });
        if (static_cast<std::size_t>(inside) < pair_threshold) {
          throw std::logic_error("cover verification failed");
        }
      }
    }
    return out;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no cover after " + std::to_string(max_retries) + " attempts; best attempt had " +
                  std::to_string(best_failures) + " failing pairs",
              best_failures);
}

// ---------------------------------------------------------------------------
// Small-component audit

struct ComponentViolation {
  std::vector<VertexId> removed;
  std::vector<VertexId> component;
};

struct ComponentAuditReport {
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<ComponentViolation> violations;  // first kMaxKept only
  static constexpr std::size_t kMaxKept = 64;
};

/*
 * For removal sets A of k-1 vertices outside L, checks that every component
 * of gk restricted to V \ (L ∪ A) is a single vertex or has at least c·n
 * vertices.
 */
inline ComponentAuditReport small_component_audit(const Graph& gk, std::span<const VertexId> cover,
                                                  std::size_t k, double c, const SearchMode& mode,
                                                  Rng& rng) {
  const std::size_t n = gk.vertex_count();
  std::vector<bool> base(n, true);
  for (VertexId v : cover) base[v] = false;
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < n; ++v) {
    if (base[v]) pool.push_back(v);
  }
  const std::size_t r = k == 0 ? 0 : k - 1;
  const double min_size = c * static_cast<double>(n);

  ComponentAuditReport report;
  auto audit = [&](const std::vector<VertexId>& removed) {
    std::vector<bool> active = base;
    for (VertexId v : removed) active[v] = false;
    const auto parts = connected_components(gk, active);
    ++report.checked;
    for (std::uint32_t label = 0; label < parts.count(); ++label) {
      const std::size_t size = parts.sizes[label];
      if (size < 2 || static_cast<double>(size) >= min_size) continue;
      ++report.violation_count;
      if (report.violations.size() < ComponentAuditReport::kMaxKept) {
        ComponentViolation bad{removed, {}};
        for (VertexId v = 0; v < n; ++v) {
          if (parts.labels[v] == label) bad.component.push_back(v);
        }
        report.violations.push_back(std::move(bad));
      }
    }
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    if (binomial(pool.size(), r) > kExhaustiveLimit) {
      throw Error(ErrorCode::TooLargeForExhaustive,
                  "C(" + std::to_string(pool.size()) + "," + std::to_string(r) + ") exceeds 1e6");
    }
    if (r > pool.size()) return report;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    do {
      std::vector<VertexId> removed(r);
      for (std::size_t i = 0; i < r; ++i) removed[i] = pool[idx[i]];
      audit(removed);
    } while (detail::next_combination(idx, pool.size()));
  } else {
    const std::size_t trials = std::get<Randomized>(mode).trials;
    if (r > pool.size()) return report;
    for (std::size_t t = 0; t < trials; ++t) audit(detail::random_subset(pool, r, rng));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Expansion

struct ExpansionReport {
  double alpha = 0.0;
  double factor = 0.0;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::optional<std::vector<VertexId>> witness;  // first violator found
};

/// True iff |out_neighborhood(S)| < factor·|S|.
inline bool violates_expansion(const KOutSample& s, std::span<const VertexId> set, double factor) {
  const auto nbrs = out_neighborhood(s, set);
  return static_cast<double>(nbrs.size()) < factor * static_cast<double>(set.size());
}

/*
 * Looks for S with 1 <= |S| <= floor(alpha·n) whose chosen out-neighborhood
 * is smaller than factor·|S|. Exhaustive mode walks every such S in size,
 * then lexicographic, order.
 */
inline ExpansionReport expansion_check(const KOutSample& s, double alpha, double factor,
                                       const SearchMode& mode, Rng& rng) {
  const std::size_t n = s.vertex_count();
  const auto max_size = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n) + 1e-9));
  ExpansionReport report{alpha, factor, 0, 0, std::nullopt};

  // Stamp-based out-neighborhood count; cheaper than out_neighborhood()
  // inside the enumeration loop.
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<std::uint32_t> member(n, 0);
  std::uint32_t epoch = 0;
  auto check = [&](const std::vector<VertexId>& set) {
    ++epoch;
    for (VertexId v : set) member[v] = epoch;
    std::size_t count = 0;
    for (const auto& entry : s.spec().entries()) {
      for (VertexId v : set) {
        for (VertexId w : s.choices(v, entry.id)) {
          if (member[w] != epoch && stamp[w] != epoch) {
            stamp[w] = epoch;
            ++count;
          }
        }
      }
    }
    ++report.checked;
    if (static_cast<double>(count) < factor * static_cast<double>(set.size())) {
      ++report.violation_count;
      if (!report.witness) report.witness = set;
    }
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    double total = 0.0;
    for (std::size_t l = 1; l <= max_size; ++l) total += binomial(n, l);
    if (total > kExhaustiveLimit) {
      throw Error(ErrorCode::TooLargeForExhaustive,
                  "sum of C(" + std::to_string(n) + ",l) for l <= " + std::to_string(max_size) +
                      " exceeds 1e6");
    }
    for (std::size_t l = 1; l <= max_size && l <= n; ++l) {
      std::vector<std::size_t> idx(l);
      for (std::size_t i = 0; i < l; ++i) idx[i] = i;
      do {
        std::vector<VertexId> set(idx.begin(), idx.end());
        check(set);
      } while (detail::next_combination(idx, n));
    }
  } else {
    if (max_size == 0) return report;
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    const std::size_t trials = std::get<Randomized>(mode).trials;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t l = 1 + uniform_below(rng, std::min(max_size, n));
      check(detail::random_subset(all, l, rng));
    }
  }
  return report;
}

}  // namespace kout
