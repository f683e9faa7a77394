// netform: command-line front end for network formation analyses.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict, 2 usage or parse error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "netform/netform.hpp"

namespace fs = std::filesystem;
using netform::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config;
  std::string graph;
  std::string out;
  std::string sequence;
  std::optional<int> n;
  int runs = 1;
  std::optional<std::uint64_t> seed;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool decimal = false;
};

class Manifest {
 public:
  Manifest(std::string command, const fs::path& out) : command_(std::move(command)), out_(out) {}

  void set_config(json config) { config_ = std::move(config); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void write_file(const std::string& rel, const std::string& text) {
    netform::io::write_text_file(out_ / rel, text);
    outputs_.push_back(rel);
  }

  void finish() {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json m{{"command", command_},
           {"config", config_},
           {"seed", seed_ ? json(*seed_) : json(nullptr)},
           {"tool_version", netform::kVersion},
           {"duration_seconds", seconds},
           {"outputs", outputs_}};
    netform::io::write_text_file(out_ / "manifest.json", m.dump(2) + "\n");
  }

 private:
  std::string command_;
  fs::path out_;
  json config_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_check(const Options& opt) {
  const netform::GameSpec spec = netform::io::game_spec_from_json(netform::io::read_json_file(opt.config));
  const netform::Graph g = netform::io::graph_from_json(netform::io::read_json_file(opt.graph));
  const auto report = netform::is_pairwise_stable(spec, g);
  std::cout << netform::io::stability_report_to_json(report, {opt.decimal}).dump(2) << "\n";
  return report.stable ? kExitOk : kExitNegative;
}

int cmd_enumerate(const Options& opt) {
  const json raw = netform::io::read_json_file(opt.config);
  const netform::PayoffModel model(netform::io::game_spec_from_json(raw));
  if (opt.n && *opt.n != model.n()) {
    std::cerr << "error: --n " << *opt.n << " differs from the config's n=" << model.n() << "\n";
    return kExitUsage;
  }
  const auto census = netform::enumerate_stable(model, opt.threads);
  const netform::io::NumberFormat fmt{opt.decimal};

  if (opt.out.empty()) {
    std::cout << netform::io::census_to_json(census, model, fmt).dump(2) << "\n";
    return kExitOk;
  }
  Manifest manifest("enumerate", opt.out);
  manifest.set_config({{"game", raw}, {"n", model.n()}, {"decimal", opt.decimal}});
  manifest.write_file("graphs/stable.json", netform::io::census_to_json(census, model, fmt).dump(2) + "\n");
  for (const auto& g : census.stable) {
    manifest.write_file("graphs/stable_" + g.code_string() + ".dot",
                        netform::io::graph_to_dot(g, "stable_" + g.code_string()));
  }
  manifest.write_file("tables/stable.csv", netform::io::census_to_csv(census, model, fmt));
  manifest.write_file("tables/by_degree_sequence.csv", netform::io::degree_groups_to_csv(census));
  manifest.finish();
  std::cout << "stable_count: " << census.stable.size() << "\n";
  return kExitOk;
}

int cmd_conditions(const Options& opt) {
  const json raw = netform::io::read_json_file(opt.config);
  const netform::GameSpec spec = netform::io::game_spec_from_json(raw);
  if (!spec.is_cournot()) {
    std::cerr << "error: conditions apply to Cournot games only\n";
    return kExitUsage;
  }
  if (!netform::has_common_shape(spec)) {
    std::cerr << "error: firms have different cost shapes; the nonnegativity bound and the "
                 "complete-graph conditions both assume a common shape\n";
    return kExitUsage;
  }
  std::optional<netform::Graph> at;
  if (!opt.graph.empty()) at = netform::io::graph_from_json(netform::io::read_json_file(opt.graph));

  std::vector<netform::ConditionCheck> checks;
  try {
    const auto nonneg = netform::check_nonneg_condition(spec, at);
    checks.push_back(nonneg.bound);
    if (nonneg.ineq_plus) checks.push_back(*nonneg.ineq_plus);
    if (nonneg.ineq_minus) checks.push_back(*nonneg.ineq_minus);
  } catch (const netform::DomainError& e) {
    std::cerr << "note: nonnegativity bound undefined for this shape: " << e.what() << "\n";
  }
  if (netform::has_common_cost(spec)) {
    for (auto& c : netform::check_complete_graph_conditions(spec)) checks.push_back(std::move(c));
  }

  std::cout << netform::io::conditions_table(checks);
  bool all = true;
  for (const auto& c : checks) all = all && c.satisfied;

  if (!opt.out.empty()) {
    Manifest manifest("conditions", opt.out);
    manifest.set_config({{"game", raw}, {"decimal", opt.decimal}});
    json rows = json::array();
    for (const auto& c : checks) rows.push_back(netform::io::condition_to_json(c, {opt.decimal}));
    manifest.write_file("tables/conditions.json", rows.dump(2) + "\n");
    manifest.write_file("tables/conditions.txt", netform::io::conditions_table(checks));
    manifest.finish();
  }
  return all ? kExitOk : kExitNegative;
}

int cmd_simulate(const Options& opt) {
  const json raw = netform::io::read_json_file(opt.config);
  netform::FormationConfig config = netform::io::formation_config_from_json(raw);
  if (opt.seed) config.seed = *opt.seed;
  if (opt.runs < 1) {
    std::cerr << "error: --runs must be at least 1\n";
    return kExitUsage;
  }
  std::vector<netform::FormationResult> results;
  const auto stats = netform::run_ensemble(config, opt.runs, opt.threads, &results);
  const auto& targets = config.spec.degree_target().targets;

  if (stats.stalled_runs * 2 > stats.runs) {
    std::cerr << "warning: " << stats.stalled_runs << " of " << stats.runs << " runs stalled\n";
  }
  if (!opt.out.empty()) {
    Manifest manifest("simulate", opt.out);
    manifest.set_config({{"formation", raw}, {"runs", opt.runs}, {"seed", config.seed}});
    manifest.set_seed(config.seed);
    manifest.write_file("tables/degree_histogram.csv", netform::io::histogram_csv(stats, targets));
    manifest.write_file("tables/per_player.csv", netform::io::per_player_csv(stats, targets));
    manifest.write_file("tables/summary.json", netform::io::ensemble_to_json(stats).dump(2) + "\n");
    for (std::size_t r = 0; r < results.size(); ++r) {
      const auto& res = results[r];
      json run{{"run", r},
               {"seed", config.seed + r},
               {"outcome", netform::to_string(res.outcome)},
               {"steps", res.steps},
               {"graph", netform::io::graph_to_json(res.graph)}};
      if (config.record_trace) run["trace"] = netform::io::trace_to_json(res.trace);
      manifest.write_file("graphs/runs/run_" + std::to_string(r) + ".json", run.dump() + "\n");
    }
    manifest.finish();
  }
  std::cout << "success_rate: " << stats.success_rate << "\n";
  return kExitOk;
}

int cmd_realize(const Options& opt) {
  const netform::DegreeSequence d = netform::io::parse_degree_list(opt.sequence);
  if (!netform::eg_check(d)) {
    std::cout << "not graphical: " << d.to_string() << "\n";
    return kExitNegative;
  }
  const netform::Graph g = netform::realize(d);
  std::cout << netform::io::graph_to_json(g).dump() << "\n";
  if (!opt.out.empty()) {
    Manifest manifest("realize", opt.out);
    manifest.set_config({{"degree_sequence", d.values()}});
    manifest.write_file("graphs/realization.json", netform::io::graph_to_json(g).dump() + "\n");
    manifest.write_file("graphs/realization.dot", netform::io::graph_to_dot(g, "realization"));
    manifest.finish();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategic network formation: pairwise stability, Cournot collaboration games, formation processes"};
  app.set_version_flag("--version", std::string(netform::kVersion));
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Test one graph for pairwise stability");
  check->add_option("--config", opt.config, "Game config JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--graph", opt.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  check->add_flag("--decimal", opt.decimal, "Render rationals as 4-place decimals");

  auto* enumerate = app.add_subcommand("enumerate", "List every pairwise stable labeled graph");
  enumerate->add_option("--config", opt.config, "Game config JSON")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--n", opt.n, "Node count (must match the config)");
  enumerate->add_option("--out", opt.out, "Output directory");
  enumerate->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--decimal", opt.decimal, "Render rationals as 4-place decimals");

  auto* conditions = app.add_subcommand("conditions", "Evaluate the Cournot parameter conditions");
  conditions->add_option("--config", opt.config, "Game config JSON")->required()->check(CLI::ExistingFile);
  conditions->add_option("--graph", opt.graph, "Graph at which to evaluate the quantity inequalities")
      ->check(CLI::ExistingFile);
  conditions->add_option("--out", opt.out, "Output directory");
  conditions->add_flag("--decimal", opt.decimal, "Render rationals as 4-place decimals");

  auto* simulate = app.add_subcommand("simulate", "Run the stochastic formation process");
  simulate->add_option("--config", opt.config, "Formation config JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--runs", opt.runs, "Number of runs");
  simulate->add_option("--seed", opt.seed, "Base seed (overrides the config)");
  simulate->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--out", opt.out, "Output directory");

  auto* realize = app.add_subcommand("realize", "Build a graph with the given degree sequence");
  realize->add_option("sequence", opt.sequence, "Comma-separated degrees, e.g. 1,1,1,2,3")->required();
  realize->add_option("--out", opt.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*enumerate) return cmd_enumerate(opt);
    if (*conditions) return cmd_conditions(opt);
    if (*simulate) return cmd_simulate(opt);
    if (*realize) return cmd_realize(opt);
  } catch (const netform::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const netform::EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const netform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
