#include "crsn/intra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "crsn/energy.hpp"
#include "crsn/lp.hpp"

namespace crsn {

namespace {

constexpr double kMinUsableRateBps = 1.0;  // slower links are zero-capacity
constexpr double kMinCadS = 1e-3;          // truncation for sampled CADs

struct MemberView {
  int id;
  double rate_bps;   // licensed rate, 0 when below the usable floor
  double coeff;      // TAP objective coefficient
  double cap_s;      // residual / rate
};

std::vector<MemberView> member_views(const Network& net, const ClusterState& cluster,
                                     const Channel& channel, const Channel& c0,
                                     const CognitiveParams& params) {
  std::vector<MemberView> views;
  views.reserve(cluster.member_ids.size());
  for (int m : cluster.member_ids) {
    const SensorNode& node = net.node(m);
    MemberView v;
    v.id = m;
    double rate = node_rate(node, channel);
    if (rate < kMinUsableRateBps) rate = 0.0;
    v.rate_bps = rate;
    const double direct = (node.tx_power_w + node.circuit_power_w) / params.amplifier_efficiency;
    if (rate > 0) {
      const double er1 = intra_energy_rate(net, m, c0, params);
      v.coeff = direct - rate * er1 / (1.0 - cluster.loss(m));
      v.cap_s = cluster.residual(m) / rate;
    } else {
      v.coeff = direct;
      v.cap_s = 0.0;
    }
    views.push_back(v);
  }
  return views;
}

}  // namespace

std::vector<double> tap_coefficients(const Network& net, const ClusterState& cluster,
                                     const Channel& channel, const Channel& c0,
                                     const CognitiveParams& params) {
  std::vector<double> coeffs;
  for (const auto& v : member_views(net, cluster, channel, c0, params)) coeffs.push_back(v.coeff);
  return coeffs;
}

TimeAllocation tap_solve_greedy(const Network& net, const ClusterState& cluster,
                                const Channel& channel, const Channel& c0,
                                const CognitiveParams& params, double cad_s) {
  const auto views = member_views(net, cluster, channel, c0, params);
  std::vector<size_t> order(views.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&views](size_t l, size_t r) { return views[l].coeff < views[r].coeff; });

  TimeAllocation alloc;
  alloc.per_member_time_s.assign(views.size(), 0.0);
  double budget = std::max(cad_s, 0.0);
  double objective = baseline_intra_energy(net, cluster, c0, params);
  for (size_t idx : order) {
    const auto& v = views[idx];
    if (v.coeff >= 0 || budget <= 0) break;
    const double t = std::min(budget, v.cap_s);
    alloc.per_member_time_s[idx] = t;
    budget -= t;
    objective += v.coeff * t;
  }
  alloc.objective_j = objective;
  return alloc;
}

TimeAllocation tap_solve_lp(const Network& net, const ClusterState& cluster,
                            const Channel& channel, const Channel& c0,
                            const CognitiveParams& params, double cad_s) {
  const auto views = member_views(net, cluster, channel, c0, params);
  const size_t n = views.size();
  std::vector<double> c(n), b;
  std::vector<std::vector<double>> a;
  for (size_t j = 0; j < n; ++j) c[j] = views[j].coeff;
  // budget row, then one cap row per member
  a.emplace_back(n, 1.0);
  b.push_back(std::max(cad_s, 0.0));
  for (size_t j = 0; j < n; ++j) {
    std::vector<double> row(n, 0.0);
    row[j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(views[j].cap_s);
  }
  const LpSolution sol = solve_lp_min(c, a, b);
  TimeAllocation alloc;
  alloc.per_member_time_s = sol.x;
  alloc.objective_j = baseline_intra_energy(net, cluster, c0, params) + sol.objective;
  return alloc;
}

double expected_intra_energy(const Network& net, const ClusterState& cluster,
                             const Channel& channel, const Channel& c0,
                             const TimeAllocation& allocation,
                             const CognitiveParams& params) {
  const double fs = channel.idle_prob() * (1.0 - channel.false_alarm_prob);
  const double baseline = baseline_intra_energy(net, cluster, c0, params);
  const double sense = params.coop_set_size * params.sense_energy_j;
  const double switch_cost =
      2.0 * static_cast<double>(cluster.member_ids.size()) * params.switch_energy_j;
  return fs * (allocation.objective_j + sense + switch_cost) + (1.0 - fs) * (baseline + sense);
}

double prospect_cad_s(const Network& net, const ClusterState& cluster, const Channel& channel,
                      const Channel& c0, const CognitiveParams& params, CadExponent exponent) {
  if (channel.cad_mode == CadMode::FixedDistribution) return channel.cad_mean_s;
  const auto cad = channel_available_duration(params.pu_protection, channel.idle_prob(),
                                              channel.false_alarm_prob, channel.mean_idle_s,
                                              exponent);
  if (cad) return *cad;
  // Unbounded budget: the channel may carry the whole backlog.
  double needed = 0;
  for (const auto& v : member_views(net, cluster, channel, c0, params))
    if (v.rate_bps > 0) needed += cluster.residual(v.id) / v.rate_bps;
  return needed;
}

std::vector<ChannelProspect> accessible_channels(const Network& net, const ClusterState& cluster,
                                                 const std::vector<Channel>& channels,
                                                 const Channel& c0, const CognitiveParams& params,
                                                 CadExponent exponent) {
  const double baseline = baseline_intra_energy(net, cluster, c0, params);
  std::vector<ChannelProspect> prospects;
  for (const auto& channel : channels) {
    if (!channel.licensed()) continue;
    ChannelProspect p;
    p.channel_id = channel.id;
    p.cad_s = prospect_cad_s(net, cluster, channel, c0, params, exponent);
    p.allocation = tap_solve_greedy(net, cluster, channel, c0, params, p.cad_s);
    p.expected_energy_j = expected_intra_energy(net, cluster, channel, c0, p.allocation, params);
    p.accessible = p.expected_energy_j < baseline;
    if (p.accessible) prospects.push_back(std::move(p));
  }
  std::sort(prospects.begin(), prospects.end(), [](const auto& l, const auto& r) {
    if (l.expected_energy_j != r.expected_energy_j)
      return l.expected_energy_j < r.expected_energy_j;
    return l.channel_id < r.channel_id;
  });
  return prospects;
}

namespace {

// Prospect list for run_intra_phase under a given strategy. ASA senses every
// licensed channel in descending-bandwidth order regardless of accessibility.
std::vector<ChannelProspect> strategy_prospects(const Network& net, const ClusterState& cluster,
                                                const std::vector<Channel>& channels,
                                                const Channel& c0, const CognitiveParams& params,
                                                const RunOptions& options) {
  if (options.strategy == StrategyKind::ASA) {
    std::vector<ChannelProspect> prospects;
    for (const auto& channel : channels) {
      if (!channel.licensed()) continue;
      ChannelProspect p;
      p.channel_id = channel.id;
      p.cad_s = prospect_cad_s(net, cluster, channel, c0, params, options.cad_exponent);
      p.allocation = tap_solve_greedy(net, cluster, channel, c0, params, p.cad_s);
      p.accessible = true;
      prospects.push_back(std::move(p));
    }
    std::sort(prospects.begin(), prospects.end(), [&channels](const auto& l, const auto& r) {
      const double bl = channel_by_id(channels, l.channel_id).bandwidth_hz;
      const double br = channel_by_id(channels, r.channel_id).bandwidth_hz;
      if (bl != br) return bl > br;
      return l.channel_id < r.channel_id;
    });
    return prospects;
  }
  return accessible_channels(net, cluster, channels, c0, params, options.cad_exponent);
}

double sample_cad_s(const Channel& channel, const CognitiveParams& params,
                    CadExponent exponent, std::mt19937_64& rng) {
  if (channel.cad_mode == CadMode::Derived) {
    const auto cad = channel_available_duration(params.pu_protection, channel.idle_prob(),
                                                channel.false_alarm_prob, channel.mean_idle_s,
                                                exponent);
    return cad ? *cad : std::numeric_limits<double>::infinity();
  }
  std::normal_distribution<double> dist(channel.cad_mean_s, std::sqrt(channel.cad_var_s2));
  return std::max(dist(rng), kMinCadS);
}

// Residual transmission over C0 with retransmissions; expected accounting by
// default, geometric attempt draws in Sampled mode.
void transmit_residual_over_c0(const Network& net, ClusterState& cluster, const Channel& c0,
                               const CognitiveParams& params, AccountingMode mode,
                               std::mt19937_64& rng, EnergyLedger& ledger) {
  for (int m : cluster.member_ids) {
    const double bits = cluster.residual(m);
    if (bits <= 0) continue;
    const SensorNode& node = net.node(m);
    const double rate = node_rate(node, c0);
    if (rate <= 0) throw std::domain_error("run_intra_phase: zero-capacity C0 link");
    double attempts = 1.0 / (1.0 - cluster.loss(m));
    if (mode == AccountingMode::Sampled) {
      std::geometric_distribution<long> failures(1.0 - cluster.loss(m));
      attempts = 1.0 + static_cast<double>(failures(rng));
    }
    const double airtime = attempts * bits / rate;
    ledger.tx_j += transmission_energy(node.tx_power_w, node.circuit_power_w,
                                       params.amplifier_efficiency, airtime);
    ledger.rx_j += reception_energy(params.rx_energy_j_per_bit, attempts * bits);
    ledger.bits_delivered += bits;
    cluster.residual_bits[m] = 0.0;
  }
}

}  // namespace

PhaseResult run_intra_phase(const Network& net, ClusterState& cluster,
                            const std::vector<Channel>& channels, const Channel& c0,
                            const CognitiveParams& params, const RunOptions& options,
                            std::mt19937_64& rng) {
  PhaseResult result;
  const int cluster_id = net.node(cluster.head_id).cluster_id;
  auto total_residual = [&cluster]() {
    double total = 0;
    for (const auto& [m, bits] : cluster.residual_bits) total += bits;
    return total;
  };

  auto emit_c0_round = [&](EnergyLedger round) {
    transmit_residual_over_c0(net, cluster, c0, params, options.accounting, rng, round);
    result.ledger += round;
    result.transcript.push_back({cluster_id, -1, round});
  };

  if (options.strategy == StrategyKind::C0Only) {
    if (total_residual() > 0) emit_c0_round({});
    return result;
  }

  while (total_residual() > 0) {
    const auto prospects = strategy_prospects(net, cluster, channels, c0, params, options);
    if (prospects.empty()) {
      emit_c0_round({});
      break;
    }

    EnergyLedger round;
    bool accessed = false;
    for (const auto& prospect : prospects) {
      const Channel& channel = channel_by_id(channels, prospect.channel_id);
      const auto sensing_set = select_sensing_set(net, cluster, channel, params);
      round.sensing_j += static_cast<double>(sensing_set.size()) * params.sense_energy_j;

      std::vector<double> pds;
      for (int id : sensing_set) pds.push_back(net.node(id).detection_prob.at(channel.id));
      const auto fused = cooperative_fusion(pds, std::vector<double>(pds.size(), 0.0));

      const auto truth = sample_channel_state(channel, rng);
      const auto outcome = sample_sensing_outcome(
          truth.idle ? ChannelTruth::Idle : ChannelTruth::Busy, fused.detection,
          channel.false_alarm_prob, options.sensing, rng);
      if (outcome.declared_state == ChannelTruth::Busy) continue;

      round.switching_j +=
          2.0 * static_cast<double>(cluster.member_ids.size()) * params.switch_energy_j;
      const double cad_s = sample_cad_s(channel, params, options.cad_exponent, rng);

      std::vector<double> times;
      const auto views = member_views(net, cluster, channel, c0, params);
      if (options.strategy == StrategyKind::AverageAllocation) {
        int with_residual = 0;
        for (const auto& v : views) if (cluster.residual(v.id) > 0) ++with_residual;
        const double share = with_residual > 0 ? cad_s / with_residual : 0.0;
        times.assign(views.size(), 0.0);
        for (size_t j = 0; j < views.size(); ++j)
          if (cluster.residual(views[j].id) > 0 && views[j].rate_bps > 0)
            times[j] = std::min(share, views[j].cap_s);
      } else {
        times = tap_solve_greedy(net, cluster, channel, c0, params, cad_s).per_member_time_s;
      }

      double moved_total = 0;
      double used_s = 0;
      for (size_t j = 0; j < views.size(); ++j) {
        const double t = times[j];
        if (t <= 0) continue;
        const SensorNode& node = net.node(views[j].id);
        const double moved = std::min(views[j].rate_bps * t, cluster.residual(views[j].id));
        round.tx_j += transmission_energy(node.tx_power_w, node.circuit_power_w,
                                          params.amplifier_efficiency, t);
        round.rx_j += reception_energy(params.rx_energy_j_per_bit, moved);
        round.bits_delivered += moved;
        cluster.residual_bits[views[j].id] -= moved;
        moved_total += moved;
        used_s += t;
      }
      if (options.sensing == SensingMode::Strict) {
        if (!truth.idle || truth.remaining_idle_s < used_s) ++round.interference_events;
      }

      if (moved_total <= 0) {
        // Access made no progress (degenerate CAD or no profitable member):
        // finish over C0 instead of spinning on the same channel.
        emit_c0_round(round);
        return result;
      }
      accessed = true;
      result.ledger += round;
      result.transcript.push_back({cluster_id, prospect.channel_id, round});
      break;
    }

    if (!accessed) {
      emit_c0_round(round);
      break;
    }
  }
  return result;
}

}  // namespace crsn
