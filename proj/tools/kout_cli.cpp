// kout_cli: generate hosts, sample k-out subgraphs, analyze graphs and run
// seeded experiments. Exit codes: 0 ok, 2 bad configuration, 3 I/O failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kout/harness.hpp"

namespace {

using kout::Error;
using kout::ErrorCode;
using kout::Json;

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

// Flags shared by every subcommand that builds a host.
struct HostFlags {
  std::string host;
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  double eps = 0.0;
  double removal_p = 0.0;
  double p = 0.0;
  CLI::Option* host_opt = nullptr;
  CLI::Option* graph_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* removal_opt = nullptr;
  CLI::Option* p_opt = nullptr;

  void attach(CLI::App* app) {
    host_opt = app->add_option("--host", host, "Host generator: complete, path, cycle, star, petersen, two_cliques, "
                                               "gnp, random_sdg, random_min_degree, edge_list");
    graph_opt = app->add_option("--graph", graph, "Edge-list file (implies --host edge_list)");
    n_opt = app->add_option("--n", n, "Host order");
    m_opt = app->add_option("--m", m, "Minimum degree for random_min_degree; longpath/longcycle m");
    eps_opt = app->add_option("--eps", eps, "Epsilon");
    removal_opt = app->add_option("--removal-p", removal_p, "Edge removal probability for random_sdg");
    p_opt = app->add_option("--p", p, "Edge probability for gnp");
  }

  // Overrides `h` with every flag that was given on the command line.
  void apply(kout::HostSpec& h) const {
    if (*host_opt) h.generator = host;
    if (*graph_opt) {
      h.generator = "edge_list";
      h.path = graph;
    }
    if (*n_opt) h.n = n;
    if (*m_opt) h.m = m;
    if (*removal_opt) h.removal_p = removal_p;
    if (*p_opt) h.p = p;
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + e.what());
  }
}

// Writes `text` to `path`, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::IoError, "write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

Json graph_summary(const kout::Graph& g) {
  const auto parts = kout::connected_components(g);
  return Json{{"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"min_degree", g.min_degree()},
              {"components", parts.count()},
              {"isolated", kout::isolated_vertices(g).size()},
              {"connectivity", kout::vertex_connectivity(g)}};
}

int run(int argc, char** argv) {
  CLI::App app{"k-out random subgraph laboratory"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a host graph as an edge list");
  HostFlags gen_host;
  gen_host.attach(gen);
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--seed", gen_seed, "Root seed");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // sample
  auto* smp = app.add_subcommand("sample", "Sample a k-out subgraph of a host and write it as JSON");
  HostFlags smp_host;
  smp_host.attach(smp);
  std::size_t smp_k = 2;
  std::string smp_mode = "without_replacement";
  std::uint64_t smp_seed = 1;
  std::string smp_out;
  smp->add_option("--k", smp_k, "Choices per vertex");
  smp->add_option("--mode", smp_mode, "with_replacement or without_replacement");
  smp->add_option("--seed", smp_seed, "Seed");
  smp->add_option("--out", smp_out, "Output path (default stdout)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Report structure of a graph, or of a sampled subgraph");
  HostFlags ana_host;
  ana_host.attach(ana);
  std::string ana_sample;
  std::uint64_t ana_seed = 1;
  std::string ana_out;
  ana->add_option("--sample", ana_sample, "Sample JSON produced by 'sample'; analyzes G_k instead of the host");
  ana->add_option("--seed", ana_seed, "Seed for random hosts");
  ana->add_option("--out", ana_out, "Output path (default stdout)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run seeded trials of one experiment");
  std::string exp_name;
  exp->add_option("name", exp_name,
                  "connectivity, hamiltonicity, longpath, longcycle, counterexample or expansion");
  HostFlags exp_host;
  exp_host.attach(exp);
  std::string config_path, exp_mode, exp_out, exp_format = "jsonl", summary_out;
  std::size_t exp_k = 0, exp_trials = 0, exp_budget = 0, exp_threads = 0;
  std::uint64_t exp_seed = 0;
  exp->add_option("--config", config_path, "JSON config file; flags override its values");
  auto* k_opt = exp->add_option("--k", exp_k, "Choices per vertex");
  auto* mode_opt = exp->add_option("--mode", exp_mode, "with_replacement or without_replacement");
  auto* trials_opt = exp->add_option("--trials", exp_trials, "Number of trials");
  auto* seed_opt = exp->add_option("--seed", exp_seed, "Root seed");
  auto* budget_opt = exp->add_option("--budget", exp_budget, "Rotation budget (hamiltonicity)");
  auto* threads_opt = exp->add_option("--threads", exp_threads, "Worker threads (default KOUT_THREADS or all cores)");
  auto* out_opt = exp->add_option("--out", exp_out, "Records output path (default stdout)");
  exp->add_option("--format", exp_format, "Records format")->check(CLI::IsMember({"csv", "json", "jsonl"}));
  exp->add_option("--summary", summary_out, "Summary JSON path (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*gen) {
    kout::HostSpec h;
    gen_host.apply(h);
    kout::Rng rng(gen_seed);
    const double eps = *gen_host.eps_opt ? gen_host.eps : 0.1;
    emit(gen_out, kout::write_edge_list(kout::build_host(h, eps, rng)));
    return 0;
  }

  if (*smp) {
    kout::HostSpec h;
    smp_host.apply(h);
    kout::Rng rng(smp_seed);
    const double eps = *smp_host.eps_opt ? smp_host.eps : 0.1;
    const kout::Graph host = kout::build_host(h, eps, rng);
    const auto s = kout::sample(host, smp_k, kout::parse_mode(smp_mode), rng);
    emit(smp_out, kout::to_json(s).dump() + "\n");
    return 0;
  }

  if (*ana) {
    kout::HostSpec h;
    ana_host.apply(h);
    kout::Rng rng(ana_seed);
    const double eps = *ana_host.eps_opt ? ana_host.eps : 0.1;
    const kout::Graph host = kout::build_host(h, eps, rng);
    Json report{{"host", graph_summary(host)}};
    if (!ana_sample.empty()) {
      const auto s = kout::sample_from_json(host, read_json_file(ana_sample));
      report["gk"] = graph_summary(kout::underlying_graph(s));
    }
    emit(ana_out, report.dump(2) + "\n");
    return 0;
  }

  // experiment: config file first, then flags.
  kout::ExperimentConfig cfg;
  if (!config_path.empty()) kout::apply_json(cfg, read_json_file(config_path));
  if (!exp_name.empty()) cfg.experiment = kout::parse_experiment(exp_name);
  exp_host.apply(cfg.host);
  if (*exp_host.eps_opt) cfg.eps = exp_host.eps;
  if (*exp_host.m_opt) cfg.m = exp_host.m;
  if (*k_opt) cfg.k = exp_k;
  if (*mode_opt) cfg.mode = kout::parse_mode(exp_mode);
  if (*trials_opt) cfg.trials = exp_trials;
  if (*seed_opt) cfg.root_seed = exp_seed;
  if (*budget_opt) cfg.budget = exp_budget;
  if (*threads_opt) cfg.threads = exp_threads;
  if (*out_opt) cfg.out = exp_out;

  const auto result = kout::run_experiment(cfg);
  std::ostringstream records;
  if (exp_format == "csv") {
    kout::write_csv(records, result.records);
  } else if (exp_format == "jsonl") {
    kout::write_jsonl(records, result.records);
  } else {
    Json all = kout::summary_json(result);
    all["records"] = Json::array();
    for (const auto& r : result.records) all["records"].push_back(kout::to_json(r));
    records << all.dump(2) << '\n';
  }
  emit(cfg.out, records.str());
  const std::string summary = kout::summary_json(result).dump(2) + "\n";
  if (summary_out.empty()) {
    std::cerr << summary;
  } else {
    emit(summary_out, summary);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? kExitIo : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
