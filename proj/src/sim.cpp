#include "crsn/sim.hpp"

#include <algorithm>
#include <cmath>

#include "crsn/energy.hpp"

namespace crsn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Point {
  double x = 0, y = 0;
  double dist(const Point& o) const { return std::hypot(x - o.x, y - o.y); }
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t h = splitmix64(root);
  h = splitmix64(h ^ splitmix64(a + 0x1000));
  h = splitmix64(h ^ splitmix64(b + 0x2000));
  h = splitmix64(h ^ splitmix64(c + 0x3000));
  return h;
}

std::mt19937_64 make_stream(std::uint64_t root, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
  return std::mt19937_64(derive_seed(root, a, b, c));
}

double PeriodRecord::intra_total_j() const {
  double total = 0;
  for (const auto& l : intra_ledgers) total += l.total();
  return total;
}

double PeriodRecord::inter_total_j() const { return inter_ledger.total(); }

double SimulationReport::total_j(StrategyKind kind) const {
  double total = 0;
  for (const auto& p : periods)
    if (p.strategy == kind) total += p.total_j();
  return total;
}

double SimulationReport::intra_total_j(StrategyKind kind) const {
  double total = 0;
  for (const auto& p : periods)
    if (p.strategy == kind) total += p.intra_total_j();
  return total;
}

double SimulationReport::inter_total_j(StrategyKind kind) const {
  double total = 0;
  for (const auto& p : periods)
    if (p.strategy == kind) total += p.inter_total_j();
  return total;
}

std::vector<Channel> build_channels(const ScenarioConfig& config, std::mt19937_64& rng) {
  std::vector<Channel> channels;
  channels.push_back(config.c0());
  std::normal_distribution<double> bandwidth(config.bandwidth_hz_mean,
                                             std::sqrt(config.bandwidth_hz_var));
  const double mean_busy_s = config.mean_idle_s * config.p_on / (1.0 - config.p_on);
  for (int x = 1; x <= config.channel_count; ++x) {
    const double b = std::max(bandwidth(rng), 0.1e6);
    channels.emplace_back(x, b, b * config.noise_density_w_per_hz, config.mean_idle_s,
                          mean_busy_s, config.false_alarm_prob, config.cad_mode,
                          config.cad_mean_s, config.cad_var_s2);
  }
  return channels;
}

Network sample_topology(const ScenarioConfig& config, std::mt19937_64& rng) {
  const int n = config.node_count;
  const int m = config.cluster_count;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Uniform placement in the disc, sink at the origin.
  std::vector<Point> positions(n);
  for (auto& p : positions) {
    const double r = config.radius_m * std::sqrt(unit(rng));
    const double theta = 2.0 * M_PI * unit(rng);
    p = {r * std::cos(theta), r * std::sin(theta)};
  }

  // Heads: the node nearest each angular-sector centroid; members by nearest head.
  const double half_angle = M_PI / m;
  const double centroid_radius = (2.0 / 3.0) * config.radius_m * std::sin(half_angle) / half_angle;
  std::vector<int> head_ids;
  std::vector<bool> is_head(n, false);
  for (int k = 0; k < m; ++k) {
    const double angle = (2.0 * k + 1.0) * half_angle;
    const Point centroid{centroid_radius * std::cos(angle), centroid_radius * std::sin(angle)};
    int best = -1;
    double best_dist = 0;
    for (int j = 0; j < n; ++j) {
      if (is_head[j]) continue;
      const double d = positions[j].dist(centroid);
      if (best < 0 || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    is_head[best] = true;
    head_ids.push_back(best);
  }
  std::vector<int> cluster_of(n, -1);
  for (int j = 0; j < n; ++j) {
    if (is_head[j]) continue;
    int best = 0;
    double best_dist = positions[j].dist(positions[head_ids[0]]);
    for (int k = 1; k < m; ++k) {
      const double d = positions[j].dist(positions[head_ids[k]]);
      if (d < best_dist) {
        best = k;
        best_dist = d;
      }
    }
    cluster_of[j] = best;
  }
  for (int k = 0; k < m; ++k) cluster_of[head_ids[k]] = k;

  // Per-link per-channel gains gamma * d^-mu toward the node's destination
  // (members to their head, heads to the sink).
  const Point sink{0.0, 0.0};
  std::exponential_distribution<double> fading(1.0);
  Network net;
  net.nodes.reserve(n);
  for (int j = 0; j < n; ++j) {
    const bool head = is_head[j];
    const Point dest = head ? sink : positions[head_ids[cluster_of[j]]];
    const double d = std::max(positions[j].dist(dest), 1.0);
    std::map<int, double> gains;
    std::map<int, double> pds;
    for (int x = 0; x <= config.channel_count; ++x) {
      gains[x] = fading(rng) * std::pow(d, -config.path_loss_exponent);
      if (x > 0) pds[x] = config.detection_prob;
    }
    net.nodes.emplace_back(j, cluster_of[j], head ? config.head_power_w : config.member_power_w,
                           config.circuit_power_w, config.data_bits_mean, std::move(pds),
                           std::move(gains));
  }

  for (int k = 0; k < m; ++k) {
    std::vector<int> members;
    std::map<int, double> loss;
    std::map<int, double> residual;
    for (int j = 0; j < n; ++j) {
      if (j == head_ids[k] || cluster_of[j] != k) continue;
      members.push_back(j);
      loss[j] = config.intra_loss;
      residual[j] = net.nodes[j].data_bits;
    }
    net.clusters.emplace_back(head_ids[k], std::move(members), std::move(loss),
                              config.inter_loss, config.aggregation_rate, std::move(residual));
  }
  return net;
}

PeriodRecord run_period(const Network& topology, const std::vector<Channel>& channels,
                        const ScenarioConfig& config, StrategyKind strategy, int period,
                        std::uint64_t root_seed) {
  Network net = topology;
  const Channel& c0 = channel_by_id(channels, 0);
  const CognitiveParams params = config.cognitive();

  // Backlog draws are strategy-independent so strategies see identical data.
  auto backlog_rng = make_stream(root_seed, static_cast<std::uint64_t>(period), 0xDA7A, 0);
  std::normal_distribution<double> backlog(config.data_bits_mean,
                                           std::sqrt(config.data_bits_var));
  for (auto& node : net.nodes) node.data_bits = std::max(backlog(backlog_rng), 1.0);
  for (auto& cluster : net.clusters)
    for (auto& [member, bits] : cluster.residual_bits) bits = net.node(member).data_bits;

  RunOptions options;
  options.strategy = strategy;
  options.accounting = config.accounting;
  options.sensing = config.sensing;
  options.cad_exponent = config.cad_exponent;
  const auto strategy_tag = static_cast<std::uint64_t>(strategy) + 1;

  PeriodRecord record;
  record.period = period;
  record.strategy = strategy;
  for (size_t i = 0; i < net.clusters.size(); ++i) {
    auto rng = make_stream(root_seed, static_cast<std::uint64_t>(period),
                           static_cast<std::uint64_t>(i), strategy_tag);
    auto phase = run_intra_phase(net, net.clusters[i], channels, c0, params, options, rng);
    record.intra_ledgers.push_back(phase.ledger);
    for (auto& row : phase.transcript) record.intra_transcript.push_back(row);
  }

  std::vector<double> head_bits = aggregated_head_bits(net, net.clusters);
  auto rng = make_stream(root_seed, static_cast<std::uint64_t>(period), 0x1A7E5, strategy_tag);
  auto inter = run_inter_phase(net, net.clusters, head_bits, channels, c0, params, options, rng);
  record.inter_ledger = inter.ledger;
  record.inter_transcript = inter.transcript;
  return record;
}

SimulationReport run_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  SimulationReport report;
  report.config_digest = config_digest(config);
  report.seed = seed;

  auto topo_rng = make_stream(seed, 0xD15C, 0, 0);
  const Network topology = sample_topology(config, topo_rng);
  auto channel_rng = make_stream(seed, 0xC4A7, 0, 0);
  const std::vector<Channel> channels = build_channels(config, channel_rng);

  const auto violations = validate_scenario(topology, channels, config.cognitive());
  if (!violations.empty())
    throw std::runtime_error("scenario failed validation: " + violations.front());

  for (int period = 0; period < config.periods; ++period)
    for (StrategyKind strategy : config.strategies)
      report.periods.push_back(
          run_period(topology, channels, config, strategy, period, seed));
  return report;
}

}  // namespace crsn
