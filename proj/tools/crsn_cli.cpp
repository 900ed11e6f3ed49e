#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crsn/energy.hpp"
#include "crsn/lp.hpp"
#include "crsn/report.hpp"
#include "crsn/sweep.hpp"

#ifndef CRSN_DEFAULT_CONFIG_DIR
#define CRSN_DEFAULT_CONFIG_DIR "configs"
#endif

namespace {

using namespace crsn;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::string strategy;
  std::string mode;
  std::string sensing;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int periods = -1;
  int seeds = -1;
};

ScenarioConfig load_with_overrides(const CommonFlags& flags) {
  ScenarioConfig config = load_config(flags.config_path);
  if (flags.seed_set) config.root_seed = flags.seed;
  if (flags.periods >= 0) config.periods = flags.periods;
  if (flags.seeds >= 1) config.seeds = flags.seeds;
  if (!flags.strategy.empty()) {
    config.strategies.clear();
    for (StrategyKind kind : {StrategyKind::Proposed, StrategyKind::C0Only, StrategyKind::ASA,
                              StrategyKind::AverageAllocation})
      if (strategy_name(kind) == flags.strategy) config.strategies.push_back(kind);
    if (config.strategies.empty())
      throw CLI::ValidationError("--strategy", "unknown strategy '" + flags.strategy + "'");
  }
  if (!flags.mode.empty())
    config.accounting =
        flags.mode == "sampled" ? AccountingMode::Sampled : AccountingMode::Expected;
  if (!flags.sensing.empty())
    config.sensing = flags.sensing == "strict" ? SensingMode::Strict : SensingMode::Idealized;
  return config;
}

void emit(const std::string& out_dir, const std::string& file_name,
          const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(out_dir);
  write_file_atomic((std::filesystem::path(out_dir) / file_name).string(), content);
}

int cmd_run(const CommonFlags& flags) {
  const ScenarioConfig config = load_with_overrides(flags);
  const auto report = run_scenario(config, config.root_seed);
  emit(flags.out_dir, config.name + "_transcript.csv", transcript_csv(report));
  if (!flags.out_dir.empty())
    emit(flags.out_dir, config.name + "_manifest.json",
         run_manifest_json(config, {config.root_seed}));
  return 0;
}

int cmd_sweep(const CommonFlags& flags, const std::string& figure) {
  CommonFlags resolved = flags;
  if (resolved.config_path.empty()) {
    if (figure.empty())
      throw CLI::RequiredError("either --config or --figure");
    resolved.config_path =
        (std::filesystem::path(CRSN_DEFAULT_CONFIG_DIR) / (figure + ".json")).string();
  }
  const ScenarioConfig config = load_with_overrides(resolved);
  const auto rows = run_sweep(config);
  emit(flags.out_dir, config.name + "_sweep.csv", sweep_csv(rows));
  if (!flags.out_dir.empty()) {
    std::vector<std::uint64_t> seeds;
    for (int s = 0; s < std::max(config.seeds, 1); ++s)
      seeds.push_back(config.root_seed + static_cast<std::uint64_t>(s));
    emit(flags.out_dir, config.name + "_manifest.json", run_manifest_json(config, seeds));
  }
  return 0;
}

int cmd_validate(const CommonFlags& flags) {
  try {
    load_config(flags.config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

// Random single-cluster TAP instance for the greedy-vs-simplex cross-check.
struct OracleInstance {
  Network net;
  Channel channel{1, 2e6, 2e-8, 0.1, 0.15, 0.05};
  Channel c0{0, 1e6, 1e-8, 0, 0, 0};
  CognitiveParams params{1.31e-4, 1e-5, 5e-9, 0.9, 0.05, 0.1, 1, 0.2};
  double cad_s = 0;
};

OracleInstance random_tap_instance(std::mt19937_64& rng) {
  OracleInstance inst;
  std::uniform_int_distribution<int> member_count(2, 9);
  std::uniform_real_distribution<double> dist_m(5.0, 60.0);
  std::uniform_real_distribution<double> bits(1e3, 1e4);
  std::uniform_real_distribution<double> loss(0.0, 0.6);
  std::uniform_real_distribution<double> bw(1e6, 3e6);
  std::uniform_real_distribution<double> cad(0.005, 0.2);
  std::exponential_distribution<double> fading(1.0);

  const double b = bw(rng);
  inst.channel = Channel(1, b, b * 1e-14, 0.1, 0.15, 0.05);
  inst.c0 = Channel(0, 1e6, 1e6 * 1e-14, 0, 0, 0);
  inst.cad_s = cad(rng);

  const int n = member_count(rng);
  std::vector<int> members;
  std::map<int, double> losses, residual;
  std::map<int, double> head_gain{{0, 1e-6}, {1, 1e-6}};
  inst.net.nodes.emplace_back(0, 0, 0.04, 0.005, 0.0, std::map<int, double>{{1, 0.95}},
                              head_gain);
  for (int j = 1; j <= n; ++j) {
    const double d = dist_m(rng);
    std::map<int, double> gains{{0, fading(rng) * std::pow(d, -3.0)},
                                {1, fading(rng) * std::pow(d, -3.0)}};
    inst.net.nodes.emplace_back(j, 0, 0.02, 0.005, bits(rng),
                                std::map<int, double>{{1, 0.95}}, std::move(gains));
    members.push_back(j);
    losses[j] = loss(rng);
    residual[j] = inst.net.nodes.back().data_bits;
  }
  inst.net.clusters.emplace_back(0, std::move(members), std::move(losses), 0.2, 0.7,
                                 std::move(residual));
  return inst;
}

bool check_tap_oracle(std::mt19937_64& rng) {
  const auto inst = random_tap_instance(rng);
  const auto& cluster = inst.net.clusters.front();
  const auto greedy =
      tap_solve_greedy(inst.net, cluster, inst.channel, inst.c0, inst.params, inst.cad_s);
  const auto lp =
      tap_solve_lp(inst.net, cluster, inst.channel, inst.c0, inst.params, inst.cad_s);
  const double scale = std::max({std::fabs(greedy.objective_j), std::fabs(lp.objective_j), 1e-12});
  return std::fabs(greedy.objective_j - lp.objective_j) <= 1e-9 * scale;
}

bool check_ptap_time_oracle(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> head_count(2, 9);
  std::uniform_real_distribution<double> bits(1e4, 1e5);
  std::uniform_real_distribution<double> gain(1e-8, 1e-5);
  std::uniform_real_distribution<double> weight(0.0, 2e-3);
  std::uniform_real_distribution<double> power(0.0, 0.2);
  std::uniform_real_distribution<double> cad(0.005, 0.2);

  const Channel channel(1, 2e6, 2e-8, 0.1, 0.15, 0.05);
  CognitiveParams params(1.31e-4, 1e-5, 5e-9, 0.9, 0.05, 0.1, 1, 0.2);

  const int n = head_count(rng);
  std::vector<HeadInstance> heads(n);
  std::vector<double> powers(n);
  for (int i = 0; i < n; ++i) {
    heads[i].head_id = i;
    heads[i].bits = bits(rng);
    heads[i].gain = gain(rng);
    heads[i].circuit_power_w = 0.005;
    heads[i].weight = weight(rng);
    powers[i] = power(rng);
  }
  const double cad_s = cad(rng);
  const auto times = optimal_time_given_power(heads, channel, powers, params, cad_s);
  const auto coeffs = ptap_time_coefficients(heads, channel, powers, params);
  double greedy_obj = 0;
  for (int i = 0; i < n; ++i) greedy_obj += coeffs[i] * times[i];

  // Same budgeted problem as a general LP: min c.t, sum t <= T, t_i <= cap_i.
  std::vector<double> c, b;
  std::vector<std::vector<double>> a;
  std::vector<int> index;
  for (int i = 0; i < n; ++i) {
    const double rate =
        powers[i] > 0
            ? channel.bandwidth_hz *
                  std::log2(1.0 + heads[i].gain * powers[i] / channel.noise_power_w)
            : 0.0;
    if (rate < 1.0) continue;
    index.push_back(i);
    c.push_back(coeffs[i]);
    std::vector<double> cap_row(index.size() - 1, 0.0);
    cap_row.push_back(1.0);
    a.push_back(cap_row);
    b.push_back(heads[i].bits / rate);
  }
  for (auto& row : a) row.resize(index.size(), 0.0);
  a.push_back(std::vector<double>(index.size(), 1.0));
  b.push_back(cad_s);
  const auto lp = solve_lp_min(c, a, b);

  const double scale = std::max({std::fabs(greedy_obj), std::fabs(lp.objective), 1e-12});
  return std::fabs(greedy_obj - lp.objective) <= 1e-9 * scale;
}

int cmd_oracle(int instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int k = 0; k < instances; ++k) {
    if (!check_tap_oracle(rng)) ++failures;
    if (!check_ptap_time_oracle(rng)) ++failures;
  }
  if (failures > 0) {
    std::cerr << "oracle: " << failures << " mismatches over " << instances
              << " instance pairs\n";
    return 1;
  }
  std::cout << "oracle: " << 2 * instances << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered cognitive-radio data-gathering simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string figure;
  int instances = 1000;

  auto add_common = [&flags](CLI::App* cmd, bool config_required) {
    auto* opt = cmd->add_option("--config", flags.config_path, "scenario config file");
    if (config_required) opt->required();
    cmd->add_option("--out", flags.out_dir, "output directory (stdout when omitted)");
    cmd->add_option("--seed", flags.seed, "root seed override")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--periods", flags.periods, "period count override");
    cmd->add_option("--seeds", flags.seeds, "seed count override (sweeps)");
    cmd->add_option("--strategy", flags.strategy, "restrict to one strategy");
    cmd->add_option("--mode", flags.mode, "accounting mode")
        ->check(CLI::IsMember({"expected", "sampled"}));
    cmd->add_option("--sensing", flags.sensing, "sensing mode")
        ->check(CLI::IsMember({"idealized", "strict"}));
  };

  auto* run = app.add_subcommand("run", "run one scenario and emit the transcript");
  add_common(run, true);

  auto* sweep = app.add_subcommand("sweep", "run a figure-reproduction sweep");
  add_common(sweep, false);
  sweep->add_option("--figure", figure, "bundled figure scenario (fig1..fig7)");

  auto* validate = app.add_subcommand("validate", "check a scenario config");
  validate->add_option("--config", flags.config_path, "scenario config file")->required();

  auto* oracle = app.add_subcommand("oracle", "cross-check greedy allocators against the LP");
  oracle->add_option("--instances", instances, "random instances per allocator");
  oracle->add_option("--seed", flags.seed, "oracle RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(flags);
    if (sweep->parsed()) return cmd_sweep(flags, figure);
    if (validate->parsed()) return cmd_validate(flags);
    if (oracle->parsed()) return cmd_oracle(instances, flags.seed ? flags.seed : 7);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
