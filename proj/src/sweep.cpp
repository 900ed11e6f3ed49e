#include "crsn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crsn/energy.hpp"
#include "crsn/sim.hpp"

namespace crsn {

namespace {

constexpr double kMinUsableRateBps = 1.0;

const char* sweep_axis_name(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::LossRate: return "loss_rate";
    case SweepVariable::LossRateIntra: return "loss_rate";
    case SweepVariable::LossRateInter: return "loss_rate";
    case SweepVariable::CadMs: return "cad_ms";
    case SweepVariable::ChannelCount: return "channel_count";
    case SweepVariable::DataScale: return "data_scale";
    case SweepVariable::None: break;
  }
  return "value";
}

struct Instance {
  Network net;
  std::vector<Channel> channels;
};

// One sampled (topology, channels, backlogs) instance, drawn exactly like the
// simulator draws period 0 so allocation-level sweeps line up with full runs.
Instance sample_instance(const ScenarioConfig& config, std::uint64_t seed) {
  Instance instance;
  auto topo_rng = make_stream(seed, 0xD15C, 0, 0);
  instance.net = sample_topology(config, topo_rng);
  auto channel_rng = make_stream(seed, 0xC4A7, 0, 0);
  instance.channels = build_channels(config, channel_rng);

  auto backlog_rng = make_stream(seed, 0, 0xDA7A, 0);
  std::normal_distribution<double> backlog(config.data_bits_mean,
                                           std::sqrt(config.data_bits_var));
  for (auto& node : instance.net.nodes) node.data_bits = std::max(backlog(backlog_rng), 1.0);
  for (auto& cluster : instance.net.clusters)
    for (auto& [member, bits] : cluster.residual_bits)
      bits = instance.net.node(member).data_bits;
  return instance;
}

struct MeanCi {
  double mean = 0;
  double ci95 = 0;
};

MeanCi mean_ci(const std::vector<double>& samples) {
  MeanCi out;
  if (samples.empty()) return out;
  for (double v : samples) out.mean += v;
  out.mean /= static_cast<double>(samples.size());
  if (samples.size() < 2) return out;
  double ss = 0;
  for (double v : samples) ss += (v - out.mean) * (v - out.mean);
  const double sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  out.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(samples.size()));
  return out;
}

double strategy_total(const SimulationReport& report, const ScenarioConfig& config,
                      StrategyKind strategy) {
  switch (config.sweep.variable) {
    case SweepVariable::LossRateIntra:
      return report.intra_total_j(strategy);
    case SweepVariable::LossRateInter:
      return report.inter_total_j(strategy);
    default:
      return report.total_j(strategy);
  }
}

std::vector<SweepRow> simulation_sweep(const ScenarioConfig& config) {
  std::vector<SweepRow> rows;
  for (double point : config.sweep.points()) {
    const ScenarioConfig swept = apply_sweep_point(config, point);
    std::vector<std::vector<double>> samples(swept.strategies.size());
    for (int s = 0; s < std::max(swept.seeds, 1); ++s) {
      const auto report = run_scenario(swept, swept.root_seed + static_cast<std::uint64_t>(s));
      for (size_t k = 0; k < swept.strategies.size(); ++k)
        samples[k].push_back(strategy_total(report, swept, swept.strategies[k]));
    }
    for (size_t k = 0; k < swept.strategies.size(); ++k) {
      const auto stat = mean_ci(samples[k]);
      rows.push_back({sweep_axis_name(swept.sweep.variable), point,
                      strategy_name(swept.strategies[k]), stat.mean, stat.ci95});
    }
  }
  return rows;
}

// Equal-split intra allocation objective: the CAD cut evenly over the members
// with residual data, each leg capped by its own backlog.
double average_intra_objective(const Network& net, const ClusterState& cluster,
                               const Channel& channel, const Channel& c0,
                               const CognitiveParams& params, double cad_s) {
  const auto coeffs = tap_coefficients(net, cluster, channel, c0, params);
  double objective = baseline_intra_energy(net, cluster, c0, params);
  int loaded = 0;
  for (int member : cluster.member_ids)
    if (cluster.residual(member) > 0) ++loaded;
  if (loaded == 0) return objective;
  const double share = cad_s / loaded;
  for (size_t j = 0; j < cluster.member_ids.size(); ++j) {
    const int member = cluster.member_ids[j];
    if (cluster.residual(member) <= 0) continue;
    const double rate = node_rate(net.node(member), channel);
    if (rate < kMinUsableRateBps) continue;
    objective += coeffs[j] * std::min(share, cluster.residual(member) / rate);
  }
  return objective;
}

const Channel& sweep_channel(const std::vector<Channel>& channels) {
  // Allocation-level sweeps study a single licensed channel; take the first.
  return channel_by_id(channels, 1);
}

std::vector<SweepRow> allocation_intra_sweep(const ScenarioConfig& config) {
  const CognitiveParams params = config.cognitive();
  std::vector<SweepRow> rows;
  const int seeds = std::max(config.seeds, 1);
  for (double point : config.sweep.points()) {
    const double cad_s = point * 1e-3;
    std::vector<double> proposed, average;
    for (int s = 0; s < seeds; ++s) {
      const auto instance =
          sample_instance(config, config.root_seed + static_cast<std::uint64_t>(s));
      const Channel& channel = sweep_channel(instance.channels);
      const Channel& c0 = channel_by_id(instance.channels, 0);
      double p = 0, a = 0;
      for (const auto& cluster : instance.net.clusters) {
        p += tap_solve_greedy(instance.net, cluster, channel, c0, params, cad_s).objective_j;
        a += average_intra_objective(instance.net, cluster, channel, c0, params, cad_s);
      }
      proposed.push_back(p);
      average.push_back(a);
    }
    const auto sp = mean_ci(proposed);
    const auto sa = mean_ci(average);
    rows.push_back({"cad_ms", point, "proposed", sp.mean, sp.ci95});
    rows.push_back({"cad_ms", point, "average", sa.mean, sa.ci95});
  }
  return rows;
}

double average_inter_objective(const Network& net, const std::vector<ClusterState>& clusters,
                               const std::vector<double>& head_bits, const Channel& channel,
                               const Channel& c0, const CognitiveParams& params,
                               double cad_s) {
  const auto heads = build_head_instances(net, clusters, head_bits, channel, c0, params);
  std::vector<double> powers(heads.size(), params.max_power_w);
  std::vector<double> times(heads.size(), 0.0);
  int loaded = 0;
  for (const auto& h : heads)
    if (h.bits > 0) ++loaded;
  if (loaded > 0) {
    const double share = cad_s / loaded;
    for (size_t i = 0; i < heads.size(); ++i) {
      if (heads[i].bits <= 0) continue;
      const double rate =
          heads[i].gain > 0
              ? channel.bandwidth_hz * std::log2(1.0 + heads[i].gain * params.max_power_w /
                                                           channel.noise_power_w)
              : 0.0;
      if (rate < kMinUsableRateBps) continue;
      times[i] = std::min(share, heads[i].bits / rate);
    }
  }
  return equivalent_objective(heads, channel, powers, times, params) +
         baseline_inter_energy(net, clusters, head_bits, c0, params);
}

std::vector<SweepRow> allocation_inter_sweep(const ScenarioConfig& config) {
  const CognitiveParams params = config.cognitive();
  std::vector<SweepRow> rows;
  const int seeds = std::max(config.seeds, 1);
  for (double point : config.sweep.points()) {
    const double cad_s = point * 1e-3;
    std::vector<double> proposed, average;
    for (int s = 0; s < seeds; ++s) {
      const auto instance =
          sample_instance(config, config.root_seed + static_cast<std::uint64_t>(s));
      const Channel& channel = sweep_channel(instance.channels);
      const Channel& c0 = channel_by_id(instance.channels, 0);
      const auto head_bits = aggregated_head_bits(instance.net, instance.net.clusters);
      proposed.push_back(acs_solve(instance.net, instance.net.clusters, head_bits, channel,
                                   c0, params, cad_s)
                             .objective_j);
      average.push_back(average_inter_objective(instance.net, instance.net.clusters,
                                                head_bits, channel, c0, params, cad_s));
    }
    const auto sp = mean_ci(proposed);
    const auto sa = mean_ci(average);
    rows.push_back({"cad_ms", point, "proposed", sp.mean, sp.ci95});
    rows.push_back({"cad_ms", point, "average", sa.mean, sa.ci95});
  }
  return rows;
}

std::vector<SweepRow> acs_trace_sweep(const ScenarioConfig& config) {
  const double cad_s = config.cad_mean_s > 0 ? config.cad_mean_s : 0.1;
  const auto trace = acs_objective_trace(config, config.root_seed, cad_s);
  std::vector<SweepRow> rows;
  for (size_t k = 0; k < trace.size(); ++k)
    rows.push_back({"iteration", static_cast<double>(k), "proposed", trace[k], 0.0});
  return rows;
}

}  // namespace

ScenarioConfig apply_sweep_point(ScenarioConfig config, double value) {
  switch (config.sweep.variable) {
    case SweepVariable::None:
      break;
    case SweepVariable::LossRate:
      config.intra_loss = value;
      config.inter_loss = value;
      break;
    case SweepVariable::LossRateIntra:
      config.intra_loss = value;
      break;
    case SweepVariable::LossRateInter:
      config.inter_loss = value;
      break;
    case SweepVariable::CadMs:
      config.cad_mean_s = value * 1e-3;
      break;
    case SweepVariable::ChannelCount:
      config.channel_count = static_cast<int>(std::lround(value));
      break;
    case SweepVariable::DataScale:
      config.data_bits_mean *= value;
      config.data_bits_var *= value * value;
      break;
  }
  return config;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config) {
  switch (config.kind) {
    case ScenarioKind::Simulation:
      return simulation_sweep(config);
    case ScenarioKind::AllocationIntra:
      return allocation_intra_sweep(config);
    case ScenarioKind::AllocationInter:
      return allocation_inter_sweep(config);
    case ScenarioKind::AcsTrace:
      return acs_trace_sweep(config);
  }
  throw std::logic_error("run_sweep: unknown scenario kind");
}

std::vector<double> acs_objective_trace(const ScenarioConfig& config, std::uint64_t seed,
                                        double cad_s, double omega_j, int max_iterations) {
  const CognitiveParams params = config.cognitive();
  const auto instance = sample_instance(config, seed);
  const Channel& channel = sweep_channel(instance.channels);
  const Channel& c0 = channel_by_id(instance.channels, 0);
  const auto head_bits = aggregated_head_bits(instance.net, instance.net.clusters);
  const auto heads =
      build_head_instances(instance.net, instance.net.clusters, head_bits, channel, c0, params);

  std::vector<double> times(heads.size(), 0.0);
  int loaded = 0;
  for (const auto& h : heads)
    if (h.bits > 0) ++loaded;
  if (loaded > 0 && cad_s > 0) {
    const double share = cad_s / loaded;
    for (size_t i = 0; i < heads.size(); ++i)
      if (heads[i].bits > 0) times[i] = share;
  }

  std::vector<double> trace{0.0};  // E(0) = 0 start convention
  double previous = 0.0;
  for (int k = 1; k <= max_iterations; ++k) {
    const auto powers = optimal_power_given_time(heads, channel, times, params);
    times = optimal_time_given_power(heads, channel, powers, params, cad_s);
    const double current = equivalent_objective(heads, channel, powers, times, params);
    trace.push_back(current);
    if (std::fabs(current - previous) <= omega_j) break;
    previous = current;
  }
  return trace;
}

}  // namespace crsn
