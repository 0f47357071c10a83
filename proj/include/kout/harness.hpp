#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "kout/audits.hpp"
#include "kout/connectivity.hpp"
#include "kout/edge_list.hpp"
#include "kout/error.hpp"
#include "kout/generators.hpp"
#include "kout/graph.hpp"
#include "kout/longcycle.hpp"
#include "kout/longpath_dfs.hpp"
#include "kout/random.hpp"
#include "kout/rotation_search.hpp"
#include "kout/sampler.hpp"
#include "kout/stats.hpp"

namespace kout {

using Json = nlohmann::json;

enum class Experiment { Connectivity, Hamiltonicity, Longpath, Longcycle, Counterexample, Expansion };

inline const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::Connectivity: return "connectivity";
    case Experiment::Hamiltonicity: return "hamiltonicity";
    case Experiment::Longpath: return "longpath";
    case Experiment::Longcycle: return "longcycle";
    case Experiment::Counterexample: return "counterexample";
    case Experiment::Expansion: return "expansion";
  }
  return "?";
}

inline Experiment parse_experiment(const std::string& name) {
  for (auto e : {Experiment::Connectivity, Experiment::Hamiltonicity, Experiment::Longpath, Experiment::Longcycle,
                 Experiment::Counterexample, Experiment::Expansion}) {
    if (name == to_string(e)) return e;
  }
  throw Error(ErrorCode::ConfigError, "experiment: unknown name '" + name + "'");
}

inline Mode parse_mode(const std::string& name) {
  if (name == "with" || name == "with_replacement" || name == "WithReplacement") return Mode::WithReplacement;
  if (name == "without" || name == "without_replacement" || name == "WithoutReplacement") {
    return Mode::WithoutReplacement;
  }
  throw Error(ErrorCode::ConfigError, "mode: expected with_replacement or without_replacement, got '" + name + "'");
}

/// Host generator and its parameters. Generators: complete, path, cycle,
/// star, petersen, two_cliques, gnp, random_sdg, random_min_degree,
/// edge_list.
struct HostSpec {
  std::string generator = "random_sdg";
  std::size_t n = 100;
  std::size_t m = 10;
  std::optional<double> eps;  // random_sdg; falls back to the experiment eps
  double removal_p = 0.3;
  double p = 0.5;
  std::string path;

  bool is_random() const { return generator == "gnp" || generator == "random_sdg" || generator == "random_min_degree"; }
};

inline Graph build_host(const HostSpec& h, double eps, Rng& rng) {
  const std::string& g = h.generator;
  if (g == "complete") return complete_graph(h.n);
  if (g == "path") return path_graph(h.n);
  if (g == "cycle") return cycle_graph(h.n);
  if (g == "star") return star_graph(h.n == 0 ? 0 : h.n - 1);
  if (g == "petersen") return petersen_graph();
  if (g == "two_cliques") return two_cliques_plus_matching(h.n);
  if (g == "gnp") return gnp_graph(h.n, h.p, rng);
  if (g == "random_sdg") return random_sdg(h.n, h.eps.value_or(eps), h.removal_p, rng);
  if (g == "random_min_degree") return random_min_degree_host(h.n, h.m, rng);
  if (g == "edge_list") return load_edge_list(h.path);
  throw Error(ErrorCode::ConfigError, "host.generator: unknown generator '" + g + "'");
}

struct ExperimentConfig {
  Experiment experiment = Experiment::Connectivity;
  HostSpec host;
  std::size_t k = 2;
  double eps = 0.1;
  Mode mode = Mode::WithoutReplacement;
  std::size_t trials = 100;
  std::uint64_t root_seed = 1;
  std::optional<std::size_t> m;  // longpath, longcycle; default min degree
  std::size_t budget = 100000;   // hamiltonicity rotations
  // connectivity
  std::size_t cover_threshold = 5;
  double cover_p = 0.15;
  std::size_t cover_retries = 10;
  double component_c = 1.0 / (8.0 * 2.718281828459045);
  std::size_t audit_trials = 200;
  // expansion
  double alpha = 0.2;
  double factor = 3.0;
  std::size_t subset_trials = 100000;
  std::size_t threads = 0;  // 0: KOUT_THREADS, else hardware concurrency
  std::string out;

  void validate() const {
    if (trials == 0) throw Error(ErrorCode::ConfigError, "trials: must be >= 1");
    if (k == 0) throw Error(ErrorCode::ConfigError, "k: must be >= 1");
    if (!(eps > 0.0) || !(eps < 1.0)) throw Error(ErrorCode::ConfigError, "eps: must lie in (0, 1)");
    if (cover_p < 0.0 || cover_p > 1.0) throw Error(ErrorCode::ConfigError, "cover_p: must lie in [0, 1]");
    if (host.generator == "edge_list" && host.path.empty()) {
      throw Error(ErrorCode::ConfigError, "host.path: required for edge_list hosts");
    }
    if (experiment == Experiment::Counterexample && host.generator != "two_cliques") {
      throw Error(ErrorCode::ConfigError, "host.generator: counterexample runs on two_cliques");
    }
  }
};

namespace detail {

template <typename T>
T json_field(const Json& j, const std::string& path) {
  // nlohmann converts -3.5 to a huge unsigned; counts must be JSON naturals.
  if constexpr (std::is_integral_v<T> && std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
    if (!j.is_number_unsigned()) throw Error(ErrorCode::ConfigError, path + ": expected a non-negative integer");
  }
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + e.what());
  }
}

template <typename T>
void read_field(const Json& obj, const char* key, const std::string& prefix, T& out) {
  if (auto it = obj.find(key); it != obj.end()) out = json_field<T>(*it, prefix + key);
}

}  // namespace detail

/// Fills `cfg` from a JSON object; absent keys keep their current values.
inline void apply_json(ExperimentConfig& cfg, const Json& j) {
  using detail::read_field;
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "config: expected a JSON object");
  if (auto it = j.find("experiment"); it != j.end()) {
    cfg.experiment = parse_experiment(detail::json_field<std::string>(*it, "experiment"));
  }
  if (auto it = j.find("mode"); it != j.end()) cfg.mode = parse_mode(detail::json_field<std::string>(*it, "mode"));
  if (auto it = j.find("host"); it != j.end()) {
    if (!it->is_object()) throw Error(ErrorCode::ConfigError, "host: expected an object");
    read_field(*it, "generator", "host.", cfg.host.generator);
    read_field(*it, "n", "host.", cfg.host.n);
    read_field(*it, "m", "host.", cfg.host.m);
    read_field(*it, "removal_p", "host.", cfg.host.removal_p);
    read_field(*it, "p", "host.", cfg.host.p);
    read_field(*it, "path", "host.", cfg.host.path);
    if (auto e = it->find("eps"); e != it->end()) cfg.host.eps = detail::json_field<double>(*e, "host.eps");
  }
  read_field(j, "k", "", cfg.k);
  read_field(j, "eps", "", cfg.eps);
  read_field(j, "trials", "", cfg.trials);
  read_field(j, "seed", "", cfg.root_seed);
  if (auto it = j.find("m"); it != j.end()) cfg.m = detail::json_field<std::size_t>(*it, "m");
  read_field(j, "budget", "", cfg.budget);
  read_field(j, "cover_threshold", "", cfg.cover_threshold);
  read_field(j, "cover_p", "", cfg.cover_p);
  read_field(j, "cover_retries", "", cfg.cover_retries);
  read_field(j, "component_c", "", cfg.component_c);
  read_field(j, "audit_trials", "", cfg.audit_trials);
  read_field(j, "alpha", "", cfg.alpha);
  read_field(j, "factor", "", cfg.factor);
  read_field(j, "subset_trials", "", cfg.subset_trials);
  read_field(j, "threads", "", cfg.threads);
  read_field(j, "out", "", cfg.out);
}

inline Json to_json(const ExperimentConfig& cfg) {
  Json host{{"generator", cfg.host.generator}, {"n", cfg.host.n},         {"m", cfg.host.m},
            {"removal_p", cfg.host.removal_p}, {"p", cfg.host.p}};
  if (cfg.host.eps) host["eps"] = *cfg.host.eps;
  if (!cfg.host.path.empty()) host["path"] = cfg.host.path;
  Json j{{"experiment", to_string(cfg.experiment)},
         {"host", host},
         {"k", cfg.k},
         {"eps", cfg.eps},
         {"mode", cfg.mode == Mode::WithReplacement ? "with_replacement" : "without_replacement"},
         {"trials", cfg.trials},
         {"seed", cfg.root_seed},
         {"budget", cfg.budget},
         {"cover_threshold", cfg.cover_threshold},
         {"cover_p", cfg.cover_p},
         {"cover_retries", cfg.cover_retries},
         {"component_c", cfg.component_c},
         {"audit_trials", cfg.audit_trials},
         {"alpha", cfg.alpha},
         {"factor", cfg.factor},
         {"subset_trials", cfg.subset_trials}};
  if (cfg.m) j["m"] = *cfg.m;
  return j;
}

using Metrics = std::map<std::string, double>;

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool success = false;
  Metrics metrics;
};

struct SummaryStats {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double frequency = 0.0;
  Interval wilson;
  Metrics means;
  Metrics extras;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> records;  // sorted by trial
  SummaryStats summary;
};

/// Success flag from a record's metrics alone.
inline bool recompute_success(Experiment e, const Metrics& m) {
  auto at = [&](const char* key) {
    const auto it = m.find(key);
    if (it == m.end()) throw Error(ErrorCode::ConfigError, std::string("metrics: missing '") + key + "'");
    return it->second;
  };
  switch (e) {
    case Experiment::Connectivity: return at("k_connected") == 1.0;
    case Experiment::Hamiltonicity: return at("found") == 1.0 && at("cycle_length") == at("n");
    case Experiment::Longpath: return at("achieved_length") >= at("target");
    case Experiment::Longcycle: return at("has_cycle") == 1.0 && at("validated") == 1.0 && at("cycle_length") >= at("target");
    case Experiment::Counterexample: return at("matching_edges") == 0.0;
    case Experiment::Expansion: return at("violations") == 0.0;
  }
  return false;
}

/// Cross-clique choices present in G_k for two_cliques_plus_matching(n).
inline std::size_t matching_edges_present(const KOutSample& s) {
  const std::size_t n = s.vertex_count();
  const VertexId half = static_cast<VertexId>(n / 2);
  std::vector<bool> present(half, false);
  for (const auto& entry : s.spec().entries()) {
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : s.choices(v, entry.id)) {
        if ((v < half) != (w < half)) present[std::min(v, w)] = true;
      }
    }
  }
  return static_cast<std::size_t>(std::count(present.begin(), present.end(), true));
}

namespace detail {

inline double flag(bool b) { return b ? 1.0 : 0.0; }
inline double num(std::size_t x) { return static_cast<double>(x); }

inline Metrics connectivity_trial(const ExperimentConfig& cfg, const Graph& host, Rng& rng) {
  const auto s = sample(host, cfg.k, cfg.mode, rng);
  const Graph gk = underlying_graph(s);
  Metrics m;
  m["n"] = num(host.vertex_count());
  m["k"] = num(cfg.k);
  m["min_degree_gk"] = num(gk.min_degree());
  m["isolated_gk"] = num(isolated_vertices(gk).size());
  const std::size_t kappa = connectivity_up_to(gk, cfg.k + 1);
  m["connectivity_capped"] = num(kappa);
  m["k_connected"] = flag(gk.vertex_count() >= cfg.k + 1 && kappa >= cfg.k);

  // Structure around a common-neighbor cover L of the host.
  std::optional<CoverResult> cover;
  try {
    cover = common_neighbor_cover(host, cfg.cover_threshold, cfg.cover_p, cfg.cover_retries, rng);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RetriesExhausted) throw;
  }
  m["cover_found"] = flag(cover.has_value());
  m["cover_size"] = cover ? num(cover->cover.size()) : -1.0;
  m["cover_attempts"] = cover ? num(cover->attempts) : -1.0;
  if (cover) {
    std::vector<bool> keep(gk.vertex_count(), true);
    for (VertexId v : cover->cover) keep[v] = false;
    const Graph core = induced_subgraph(gk, keep);
    std::size_t isolated = 0;
    std::size_t outside_isolated_gk = 0;
    for (VertexId v = 0; v < gk.vertex_count(); ++v) {
      if (!keep[v]) continue;
      if (core.degree(v) == 0) ++isolated;
      if (gk.degree(v) == 0) ++outside_isolated_gk;
    }
    m["isolated_core"] = num(isolated);
    m["isolated_outside_cover"] = num(outside_isolated_gk);
    const std::size_t pool = gk.vertex_count() - cover->cover.size();
    const std::size_t r = cfg.k - 1;
    const SearchMode mode = binomial(pool, r) <= static_cast<double>(cfg.audit_trials) ? SearchMode{Exhaustive{}}
                                                                                        : SearchMode{Randomized{cfg.audit_trials}};
    const auto audit = small_component_audit(gk, cover->cover, cfg.k, cfg.component_c, mode, rng);
    m["audit_checked"] = num(audit.checked);
    m["audit_violations"] = num(audit.violation_count);
  } else {
    m["isolated_core"] = -1.0;
    m["isolated_outside_cover"] = -1.0;
    m["audit_checked"] = 0.0;
    m["audit_violations"] = -1.0;
  }
  return m;
}

inline Metrics hamiltonicity_trial(const ExperimentConfig& cfg, const Graph& host, Rng& rng) {
  const auto s = sample(host, cfg.k, cfg.mode, rng);
  const Graph gk = underlying_graph(s);
  const auto cycle = hamiltonicity_search(gk, cfg.budget, rng);
  Metrics m;
  m["n"] = num(host.vertex_count());
  m["k"] = num(cfg.k);
  m["min_degree_gk"] = num(gk.min_degree());
  m["connected_gk"] = flag(is_connected(gk));
  m["found"] = flag(cycle.has_value());
  m["cycle_length"] = cycle ? num(cycle->size()) : 0.0;
  return m;
}

inline Metrics longpath_trial(const ExperimentConfig& cfg, const Graph& host, Rng& rng) {
  const auto r = theorem3_trial(host, cfg.k, cfg.eps, rng, cfg.m);
  Metrics m;
  m["n"] = num(host.vertex_count());
  m["k"] = num(cfg.k);
  m["m"] = num(r.m);
  m["budget"] = num(r.budget);
  m["achieved_length"] = num(r.achieved_length);
  m["target"] = r.target;
  m["k_meets_bound"] = flag(r.k_meets_bound);
  return m;
}

inline Metrics longcycle_trial(const ExperimentConfig& cfg, const Graph& host, Rng& rng) {
  const auto run = long_cycle(host, cfg.k, cfg.eps, rng, cfg.m);
  Metrics m;
  m["n"] = num(host.vertex_count());
  m["k"] = num(cfg.k);
  m["m"] = num(run.thresholds.m);
  m["target"] = run.result.target;
  m["has_cycle"] = flag(run.result.cycle.has_value());
  m["cycle_length"] = num(run.result.length);
  bool valid = false;
  if (run.result.cycle) {
    const RevealedEdges revealed(run.log);
    valid = is_revealed_cycle(host, revealed, *run.result.cycle) && run.result.cycle->size() == run.result.length;
  }
  m["validated"] = flag(valid);
  std::size_t successes = 0, rest_violations = 0;
  for (const auto& e : run.epochs) {
    if (e.outcome != EpochOutcome::Success) continue;
    ++successes;
    if (!e.rest_bound_ok) ++rest_violations;
  }
  m["epochs"] = num(run.epochs.size());
  m["successful_epochs"] = num(successes);
  m["rest_bound_violations"] = num(rest_violations);
  double interrupt = 0.0;
  if (run.interrupted_at) {
    for (const auto& e : run.epochs) {
      if (e.id == *run.interrupted_at) interrupt = e.outcome == EpochOutcome::InterruptB ? 1.0 : 2.0;
    }
  }
  m["interrupt"] = interrupt;  // 0 none, 1 B, 2 C
  m["fallback"] = flag(run.fallback_used);
  m["provenance"] = static_cast<double>(run.result.provenance);  // 0 None, 1 FromC, 2 FromB
  m["draws"] = num(run.log.size());
  return m;
}

inline Metrics counterexample_trial(const ExperimentConfig& cfg, const Graph& host, Rng& rng) {
  const auto s = sample(host, cfg.k, Mode::WithoutReplacement, rng);
  Metrics m;
  m["n"] = num(host.vertex_count());
  m["k"] = num(cfg.k);
  m["matching_edges"] = num(matching_edges_present(s));
  return m;
}

inline Metrics expansion_trial(const ExperimentConfig& cfg, const Graph& host, Rng& rng) {
  const auto s = sample(host, cfg.k, cfg.mode, rng);
  const std::size_t n = host.vertex_count();
  const auto max_size = static_cast<std::size_t>(std::floor(cfg.alpha * static_cast<double>(n) + 1e-9));
  double total = 0.0;
  for (std::size_t l = 1; l <= max_size; ++l) total += binomial(n, l);
  const bool exhaustive = total <= kExhaustiveLimit;
  const SearchMode mode = exhaustive ? SearchMode{Exhaustive{}} : SearchMode{Randomized{cfg.subset_trials}};
  const auto report = expansion_check(s, cfg.alpha, cfg.factor, mode, rng);
  Metrics m;
  m["n"] = num(n);
  m["k"] = num(cfg.k);
  m["exhaustive"] = flag(exhaustive);
  m["checked"] = num(report.checked);
  m["violations"] = num(report.violation_count);
  m["witness_size"] = report.witness ? num(report.witness->size()) : 0.0;
  bool witness_valid = true;
  if (report.witness) {
    witness_valid = violates_expansion(s, *report.witness, cfg.factor) &&
                    static_cast<double>(report.witness->size()) <= cfg.alpha * static_cast<double>(n) + 1e-9;
  }
  m["witness_valid"] = flag(witness_valid);
  return m;
}

inline std::size_t worker_count(const ExperimentConfig& cfg) {
  std::size_t threads = cfg.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("KOUT_THREADS"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (*end != '\0' || v == 0) throw Error(ErrorCode::ConfigError, "KOUT_THREADS: expected a positive integer");
      threads = v;
    } else {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
  }
  return std::max<std::size_t>(1, std::min(threads, cfg.trials));
}

}  // namespace detail

/*
 * Trial i runs on Rng(derive_seed(root_seed, i)). Random hosts are drawn
 * from that stream first, so a trial sees the same host at every k.
 */
inline TrialRecord run_trial(const ExperimentConfig& cfg, const Graph* fixed_host, std::size_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.root_seed, trial);
  Rng rng(rec.seed);
  std::optional<Graph> own;
  if (fixed_host == nullptr) own = build_host(cfg.host, cfg.eps, rng);
  const Graph& host = fixed_host != nullptr ? *fixed_host : *own;
  switch (cfg.experiment) {
    case Experiment::Connectivity: rec.metrics = detail::connectivity_trial(cfg, host, rng); break;
    case Experiment::Hamiltonicity: rec.metrics = detail::hamiltonicity_trial(cfg, host, rng); break;
    case Experiment::Longpath: rec.metrics = detail::longpath_trial(cfg, host, rng); break;
    case Experiment::Longcycle: rec.metrics = detail::longcycle_trial(cfg, host, rng); break;
    case Experiment::Counterexample: rec.metrics = detail::counterexample_trial(cfg, host, rng); break;
    case Experiment::Expansion: rec.metrics = detail::expansion_trial(cfg, host, rng); break;
  }
  rec.success = recompute_success(cfg.experiment, rec.metrics);
  return rec;
}

inline double counterexample_exact(std::size_t n, std::size_t k) {
  if (2 * k >= n) return 0.0;
  const double x = 2.0 * static_cast<double>(k) / static_cast<double>(n);
  return std::exp(static_cast<double>(n) * std::log1p(-x));
}

inline SummaryStats summarize(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  SummaryStats s;
  s.trials = records.size();
  for (const auto& r : records) {
    s.successes += r.success ? 1 : 0;
    for (const auto& [key, value] : r.metrics) s.means[key] += value;
  }
  for (auto& [key, value] : s.means) value /= static_cast<double>(s.trials);
  s.frequency = static_cast<double>(s.successes) / static_cast<double>(s.trials);
  s.wilson = wilson_interval(s.successes, s.trials);
  if (cfg.experiment == Experiment::Counterexample) {
    const std::size_t n = cfg.host.n;
    const double k = static_cast<double>(cfg.k);
    const double exact = counterexample_exact(n, cfg.k);
    s.extras["exact_p"] = exact;
    s.extras["exp_minus_2k"] = std::exp(-2.0 * k);
    s.extras["bound_exp_minus_k"] = std::exp(-k);
    s.extras["half_power_bound"] = std::sqrt(exact);  // (1 - 2k/n)^(n/2)
    const double sigma = binomial_sigma(exact, s.trials);
    s.extras["sigma"] = sigma;
    s.extras["z_score"] = sigma > 0.0 ? (s.frequency - exact) / sigma : 0.0;
  }
  return s;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::optional<Graph> fixed;
  if (!cfg.host.is_random()) {
    Rng unused(cfg.root_seed);
    fixed = build_host(cfg.host, cfg.eps, unused);
  }
  const Graph* fixed_ptr = fixed ? &*fixed : nullptr;

  ExperimentResult out;
  out.config = cfg;
  out.records.resize(cfg.trials);
  const std::size_t workers = detail::worker_count(cfg);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.trials) return;
      try {
        out.records[i] = run_trial(cfg, fixed_ptr, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.trials;
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  out.summary = summarize(cfg, out.records);
  return out;
}

struct CounterexampleReport {
  double empirical_p = 0.0;
  double exact_p = 0.0;
  double exp_minus_2k = 0.0;
  double paper_bound = 0.0;  // e^{-k}
  double half_power = 0.0;   // (1 - 2k/n)^{n/2}
  std::size_t trials = 0;
  std::size_t successes = 0;
};

inline CounterexampleReport counterexample_experiment(std::size_t n, std::size_t k, std::size_t trials,
                                                      std::uint64_t seed, std::size_t threads = 0) {
  if (2 * k > n) throw Error(ErrorCode::ConfigError, "k: must be at most n/2");
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Counterexample;
  cfg.host.generator = "two_cliques";
  cfg.host.n = n;
  cfg.k = k;
  cfg.mode = Mode::WithoutReplacement;
  cfg.trials = trials;
  cfg.root_seed = seed;
  cfg.threads = threads;
  const auto res = run_experiment(cfg);
  CounterexampleReport r;
  r.empirical_p = res.summary.frequency;
  r.exact_p = res.summary.extras.at("exact_p");
  r.exp_minus_2k = res.summary.extras.at("exp_minus_2k");
  r.paper_bound = res.summary.extras.at("bound_exp_minus_k");
  r.half_power = res.summary.extras.at("half_power_bound");
  r.trials = res.summary.trials;
  r.successes = res.summary.successes;
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

inline Json to_json(const TrialRecord& r) {
  return Json{{"trial", r.trial}, {"seed", r.seed}, {"success", r.success}, {"metrics", r.metrics}};
}

inline Json to_json(const SummaryStats& s) {
  return Json{{"trials", s.trials},
              {"successes", s.successes},
              {"frequency", s.frequency},
              {"wilson95", {s.wilson.lo, s.wilson.hi}},
              {"means", s.means},
              {"extras", s.extras}};
}

inline Json summary_json(const ExperimentResult& r) {
  return Json{{"config", to_json(r.config)}, {"summary", to_json(r.summary)}};
}

inline void write_jsonl(std::ostream& os, const std::vector<TrialRecord>& records) {
  for (const auto& r : records) os << to_json(r).dump() << '\n';
}

/// trial, seed, success, then metric columns in alphabetical order.
inline void write_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  std::vector<std::string> columns;
  if (!records.empty()) {
    for (const auto& [key, value] : records.front().metrics) columns.push_back(key);
  }
  os << "trial,seed,success";
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  for (const auto& r : records) {
    os << r.trial << ',' << r.seed << ',' << (r.success ? 1 : 0);
    for (const auto& c : columns) {
      const auto it = r.metrics.find(c);
      os << ',' << (it == r.metrics.end() ? std::string() : Json(it->second).dump());
    }
    os << '\n';
  }
}

inline Json to_json(const KOutSample& s) {
  Json colors_json = Json::array();
  for (const auto& entry : s.spec().entries()) {
    Json rows = Json::array();
    for (VertexId v = 0; v < s.vertex_count(); ++v) {
      const auto picks = s.choices(v, entry.id);
      rows.push_back(std::vector<VertexId>(picks.begin(), picks.end()));
    }
    colors_json.push_back({{"id", entry.id}, {"k", entry.multiplicity}, {"choices", rows}});
  }
  return Json{{"n", s.vertex_count()},
              {"mode", s.mode() == Mode::WithReplacement ? "with_replacement" : "without_replacement"},
              {"colors", colors_json}};
}

/// Inverse of to_json(KOutSample); the sample is re-validated against host.
inline KOutSample sample_from_json(const Graph& host, const Json& j) {
  try {
    if (j.at("n").get<std::size_t>() != host.vertex_count()) {
      throw Error(ErrorCode::ConfigError, "sample.n: does not match the host");
    }
    const Mode mode = parse_mode(j.at("mode").get<std::string>());
    std::vector<ColorEntry> entries;
    std::vector<std::vector<VertexId>> table;
    for (const auto& c : j.at("colors")) {
      const auto k = c.at("k").get<std::size_t>();
      entries.push_back({c.at("id").get<ColorId>(), k});
      std::vector<VertexId> flat;
      for (const auto& row : c.at("choices")) {
        const auto picks = row.get<std::vector<VertexId>>();
        if (picks.size() != k) throw Error(ErrorCode::BadMultiplicity, "sample.colors.choices: row length != k");
        flat.insert(flat.end(), picks.begin(), picks.end());
      }
      table.push_back(std::move(flat));
    }
    return KOutSample(host, ColorSpec(std::move(entries)), mode, std::move(table));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("sample: ") + e.what());
  }
}

inline Json to_json(const ExpansionReport& r) {
  Json j{{"alpha", r.alpha}, {"factor", r.factor}, {"checked", r.checked}, {"violations", r.violation_count}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const ComponentAuditReport& r) {
  Json list = Json::array();
  for (const auto& v : r.violations) list.push_back({{"removed", v.removed}, {"component", v.component}});
  return Json{{"checked", r.checked}, {"violations", r.violation_count}, {"examples", list}};
}

/// One JSON object per epoch: id, color, |A|, |B|, |C|, steps, outcome.
inline void write_epoch_trace(std::ostream& os, const LongCycleRun& run) {
  for (const auto& e : run.epochs) {
    os << Json{{"id", e.id},
               {"color", color_name(e.color)},
               {"A", e.a.size()},
               {"B", e.b.size()},
               {"C", e.c.size()},
               {"steps", e.steps_used},
               {"outcome", to_string(e.outcome)}}
              .dump()
       << '\n';
  }
}

}  // namespace kout
