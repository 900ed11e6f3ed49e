#include "crsn/inter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "crsn/energy.hpp"
#include "crsn/lp.hpp"

namespace crsn {

namespace {

constexpr double kMinUsableRateBps = 1.0;
constexpr double kMinCadS = 1e-3;
constexpr double kLn2 = 0.6931471805599453;

double head_rate(const HeadInstance& head, const Channel& channel, double power_w) {
  if (head.gain <= 0 || power_w <= 0) return 0.0;
  return channel.bandwidth_hz *
         std::log2(1.0 + head.gain * power_w / channel.noise_power_w);
}

double power_cap(const HeadInstance& head, const Channel& channel, double time_s,
                 double max_power_w) {
  if (head.gain <= 0) return max_power_w;
  const double exponent = head.bits / (channel.bandwidth_hz * time_s);
  if (exponent > 60.0) return max_power_w;  // data cap far beyond P_max
  const double data_cap = (std::exp2(exponent) - 1.0) * channel.noise_power_w / head.gain;
  return std::min(data_cap, max_power_w);
}

}  // namespace

std::vector<HeadInstance> build_head_instances(const Network& net,
                                               const std::vector<ClusterState>& clusters,
                                               const std::vector<double>& head_bits,
                                               const Channel& channel, const Channel& c0,
                                               const CognitiveParams& params) {
  if (head_bits.size() != clusters.size())
    throw std::domain_error("build_head_instances: one backlog per cluster required");
  std::vector<HeadInstance> heads(clusters.size());
  for (size_t i = 0; i < clusters.size(); ++i) {
    const SensorNode& node = net.node(clusters[i].head_id);
    HeadInstance& h = heads[i];
    h.head_id = clusters[i].head_id;
    h.bits = head_bits[i];
    h.loss = clusters[i].head_loss_c0;
    const auto it = node.link_gain.find(channel.id);
    h.gain = it == node.link_gain.end() ? 0.0 : it->second;
    h.circuit_power_w = node.circuit_power_w;
    h.weight = channel.bandwidth_hz * inter_energy_rate(net, clusters[i], c0, params) /
               (1.0 - h.loss);
  }
  return heads;
}

double equivalent_objective(const std::vector<HeadInstance>& heads, const Channel& channel,
                            const std::vector<double>& powers, const std::vector<double>& times,
                            const CognitiveParams& params) {
  double total = 0;
  for (size_t i = 0; i < heads.size(); ++i) {
    const double p = powers[i];
    const double t = times[i];
    total += (p + heads[i].circuit_power_w) * t / params.amplifier_efficiency;
    if (heads[i].gain > 0 && p > 0)
      total -= heads[i].weight *
               std::log2(1.0 + heads[i].gain * p / channel.noise_power_w) * t;
  }
  return total;
}

std::vector<double> optimal_power_given_time(const std::vector<HeadInstance>& heads,
                                             const Channel& channel,
                                             const std::vector<double>& times,
                                             const CognitiveParams& params) {
  std::vector<double> powers(heads.size(), 0.0);
  for (size_t i = 0; i < heads.size(); ++i) {
    if (times[i] <= 0 || heads[i].gain <= 0 || heads[i].bits <= 0) continue;
    const double stationary = heads[i].weight * params.amplifier_efficiency / kLn2 -
                              channel.noise_power_w / heads[i].gain;
    if (stationary <= 0) continue;
    const double cap = power_cap(heads[i], channel, times[i], params.max_power_w);
    powers[i] = std::min(stationary, cap);
  }
  return powers;
}

std::vector<double> ptap_time_coefficients(const std::vector<HeadInstance>& heads,
                                           const Channel& channel,
                                           const std::vector<double>& powers,
                                           const CognitiveParams& params) {
  std::vector<double> coeffs(heads.size(), 0.0);
  for (size_t i = 0; i < heads.size(); ++i) {
    const double direct =
        (powers[i] + heads[i].circuit_power_w) / params.amplifier_efficiency;
    double spectral = 0;
    if (heads[i].gain > 0 && powers[i] > 0)
      spectral = std::log2(1.0 + heads[i].gain * powers[i] / channel.noise_power_w);
    coeffs[i] = direct - heads[i].weight * spectral;
  }
  return coeffs;
}

std::vector<double> optimal_time_given_power(const std::vector<HeadInstance>& heads,
                                             const Channel& channel,
                                             const std::vector<double>& powers,
                                             const CognitiveParams& params, double cad_s) {
  const auto coeffs = ptap_time_coefficients(heads, channel, powers, params);
  std::vector<size_t> order(heads.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&coeffs](size_t l, size_t r) { return coeffs[l] < coeffs[r]; });
  std::vector<double> times(heads.size(), 0.0);
  double budget = std::max(cad_s, 0.0);
  for (size_t idx : order) {
    if (coeffs[idx] >= 0 || budget <= 0) break;
    const double rate = head_rate(heads[idx], channel, powers[idx]);
    if (rate < kMinUsableRateBps) continue;
    const double cap = heads[idx].bits / rate;
    const double t = std::min(budget, cap);
    times[idx] = t;
    budget -= t;
  }
  return times;
}

PowerTimeAllocation acs_solve(const Network& net, const std::vector<ClusterState>& clusters,
                              const std::vector<double>& head_bits, const Channel& channel,
                              const Channel& c0, const CognitiveParams& params, double cad_s,
                              double omega_j, int max_iterations) {
  if (omega_j <= 0) throw std::domain_error("acs_solve: omega must be > 0");
  if (max_iterations < 1) throw std::domain_error("acs_solve: need at least one iteration");
  const auto heads = build_head_instances(net, clusters, head_bits, channel, c0, params);
  const double baseline = baseline_inter_energy(net, clusters, head_bits, c0, params);

  // Deterministic feasible start: equal cut of the CAD across heads with
  // positive backlog, zero power.
  PowerTimeAllocation result;
  result.per_head_power_w.assign(heads.size(), 0.0);
  result.per_head_time_s.assign(heads.size(), 0.0);
  int loaded = 0;
  for (const auto& h : heads)
    if (h.bits > 0) ++loaded;
  if (loaded > 0 && cad_s > 0) {
    const double share = cad_s / loaded;
    for (size_t i = 0; i < heads.size(); ++i)
      if (heads[i].bits > 0) result.per_head_time_s[i] = share;
  }

  double previous = 0.0;  // Algorithm-2 initialization E(0) = 0
  double current = previous;
  for (int k = 1; k <= max_iterations; ++k) {
    result.per_head_power_w =
        optimal_power_given_time(heads, channel, result.per_head_time_s, params);
    result.per_head_time_s =
        optimal_time_given_power(heads, channel, result.per_head_power_w, params, cad_s);
    current = equivalent_objective(heads, channel, result.per_head_power_w,
                                   result.per_head_time_s, params);
    result.iterations = k;
    if (std::fabs(current - previous) <= omega_j) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  result.objective_j = current + baseline;
  return result;
}

double expected_inter_energy(const Network& net, const std::vector<ClusterState>& clusters,
                             const std::vector<double>& head_bits, const Channel& channel,
                             const Channel& c0, const PowerTimeAllocation& allocation,
                             const CognitiveParams& params) {
  const double fs = channel.idle_prob() * (1.0 - channel.false_alarm_prob);
  const double baseline = baseline_inter_energy(net, clusters, head_bits, c0, params);
  const double sense = params.coop_set_size * params.sense_energy_j;
  const double switch_cost =
      2.0 * static_cast<double>(clusters.size()) * params.switch_energy_j;
  return fs * (allocation.objective_j + sense + switch_cost) + (1.0 - fs) * (baseline + sense);
}

namespace {

double inter_prospect_cad_s(const std::vector<HeadInstance>& heads, const Channel& channel,
                            const CognitiveParams& params, CadExponent exponent) {
  if (channel.cad_mode == CadMode::FixedDistribution) return channel.cad_mean_s;
  const auto cad = channel_available_duration(params.pu_protection, channel.idle_prob(),
                                              channel.false_alarm_prob, channel.mean_idle_s,
                                              exponent);
  if (cad) return *cad;
  double needed = 0;
  for (const auto& h : heads) {
    const double rate = head_rate(h, channel, params.max_power_w);
    if (rate >= kMinUsableRateBps) needed += h.bits / rate;
  }
  return needed;
}

std::vector<int> select_head_sensing_set(const Network& net,
                                         const std::vector<ClusterState>& clusters,
                                         const Channel& channel,
                                         const CognitiveParams& params) {
  if (clusters.size() < static_cast<size_t>(params.coop_set_size))
    throw std::domain_error("select_head_sensing_set: fewer heads than sensing set size");
  std::vector<int> order;
  for (const auto& c : clusters) order.push_back(c.head_id);
  auto pd_of = [&](int id) {
    const auto& probs = net.node(id).detection_prob;
    auto it = probs.find(channel.id);
    return it == probs.end() ? 0.0 : it->second;
  };
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    const double pl = pd_of(lhs), pr = pd_of(rhs);
    if (pl != pr) return pl > pr;
    return lhs < rhs;
  });
  order.resize(static_cast<size_t>(params.coop_set_size));
  std::vector<double> pds;
  for (int id : order) pds.push_back(pd_of(id));
  if (!pu_protection_satisfied(channel.busy_prob(), pds, params.interference_threshold))
    throw InfeasibleProtection("no feasible head sensing set of the configured size");
  return order;
}

}  // namespace

std::vector<InterProspect> inter_accessible_channels(
    const Network& net, const std::vector<ClusterState>& clusters,
    const std::vector<double>& head_bits, const std::vector<Channel>& channels,
    const Channel& c0, const CognitiveParams& params, CadExponent exponent) {
  const double baseline = baseline_inter_energy(net, clusters, head_bits, c0, params);
  std::vector<InterProspect> prospects;
  for (const auto& channel : channels) {
    if (!channel.licensed()) continue;
    const auto heads = build_head_instances(net, clusters, head_bits, channel, c0, params);
    InterProspect p;
    p.channel_id = channel.id;
    p.cad_s = inter_prospect_cad_s(heads, channel, params, exponent);
    p.allocation = acs_solve(net, clusters, head_bits, channel, c0, params, p.cad_s);
    p.expected_energy_j =
        expected_inter_energy(net, clusters, head_bits, channel, c0, p.allocation, params);
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

std::vector<InterProspect> inter_strategy_prospects(
    const Network& net, const std::vector<ClusterState>& clusters,
    const std::vector<double>& head_bits, const std::vector<Channel>& channels,
    const Channel& c0, const CognitiveParams& params, const RunOptions& options) {
  if (options.strategy == StrategyKind::ASA) {
    std::vector<InterProspect> prospects;
    for (const auto& channel : channels) {
      if (!channel.licensed()) continue;
      const auto heads = build_head_instances(net, clusters, head_bits, channel, c0, params);
      InterProspect p;
      p.channel_id = channel.id;
      p.cad_s = inter_prospect_cad_s(heads, channel, params, options.cad_exponent);
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
  return inter_accessible_channels(net, clusters, head_bits, channels, c0, params,
                                   options.cad_exponent);
}

void transmit_head_residual_over_c0(const Network& net,
                                    const std::vector<ClusterState>& clusters,
                                    std::vector<double>& head_bits, const Channel& c0,
                                    const CognitiveParams& params, AccountingMode mode,
                                    std::mt19937_64& rng, EnergyLedger& ledger) {
  for (size_t i = 0; i < clusters.size(); ++i) {
    const double bits = head_bits[i];
    if (bits <= 0) continue;
    const SensorNode& head = net.node(clusters[i].head_id);
    const double rate = node_rate(head, c0);
    if (rate <= 0) throw std::domain_error("run_inter_phase: zero-capacity C0 link");
    double attempts = 1.0 / (1.0 - clusters[i].head_loss_c0);
    if (mode == AccountingMode::Sampled) {
      std::geometric_distribution<long> failures(1.0 - clusters[i].head_loss_c0);
      attempts = 1.0 + static_cast<double>(failures(rng));
    }
    const double airtime = attempts * bits / rate;
    ledger.tx_j += transmission_energy(head.tx_power_w, head.circuit_power_w,
                                       params.amplifier_efficiency, airtime);
    ledger.rx_j += reception_energy(params.rx_energy_j_per_bit, attempts * bits);
    ledger.bits_delivered += bits;
    head_bits[i] = 0.0;
  }
}

double sample_inter_cad_s(const Channel& channel, const CognitiveParams& params,
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

}  // namespace

PhaseResult run_inter_phase(const Network& net, const std::vector<ClusterState>& clusters,
                            std::vector<double>& head_bits, const std::vector<Channel>& channels,
                            const Channel& c0, const CognitiveParams& params,
                            const RunOptions& options, std::mt19937_64& rng) {
  PhaseResult result;
  auto total_residual = [&head_bits]() {
    double total = 0;
    for (double b : head_bits) total += b;
    return total;
  };
  auto emit_c0_round = [&](EnergyLedger round) {
    transmit_head_residual_over_c0(net, clusters, head_bits, c0, params, options.accounting,
                                   rng, round);
    result.ledger += round;
    result.transcript.push_back({-1, -1, round});
  };

  if (options.strategy == StrategyKind::C0Only) {
    if (total_residual() > 0) emit_c0_round({});
    return result;
  }

  while (total_residual() > 0) {
    const auto prospects =
        inter_strategy_prospects(net, clusters, head_bits, channels, c0, params, options);
    if (prospects.empty()) {
      emit_c0_round({});
      break;
    }

    EnergyLedger round;
    bool accessed = false;
    for (const auto& prospect : prospects) {
      const Channel& channel = channel_by_id(channels, prospect.channel_id);
      const auto sensing_set = select_head_sensing_set(net, clusters, channel, params);
      round.sensing_j += static_cast<double>(sensing_set.size()) * params.sense_energy_j;

      std::vector<double> pds;
      for (int id : sensing_set) pds.push_back(net.node(id).detection_prob.at(channel.id));
      const auto fused = cooperative_fusion(pds, std::vector<double>(pds.size(), 0.0));

      const auto truth = sample_channel_state(channel, rng);
      const auto outcome = sample_sensing_outcome(
          truth.idle ? ChannelTruth::Idle : ChannelTruth::Busy, fused.detection,
          channel.false_alarm_prob, options.sensing, rng);
      if (outcome.declared_state == ChannelTruth::Busy) continue;

      round.switching_j += 2.0 * static_cast<double>(clusters.size()) * params.switch_energy_j;
      const double cad_s = sample_inter_cad_s(channel, params, options.cad_exponent, rng);
      const auto heads = build_head_instances(net, clusters, head_bits, channel, c0, params);

      std::vector<double> powers, times;
      if (options.strategy == StrategyKind::AverageAllocation) {
        // Equal CAD cut over heads with residual data, maximum power.
        powers.assign(heads.size(), params.max_power_w);
        times.assign(heads.size(), 0.0);
        int loaded = 0;
        for (const auto& h : heads)
          if (h.bits > 0 && head_rate(h, channel, params.max_power_w) >= kMinUsableRateBps)
            ++loaded;
        const double share = loaded > 0 ? cad_s / loaded : 0.0;
        for (size_t i = 0; i < heads.size(); ++i) {
          const double rate = head_rate(heads[i], channel, params.max_power_w);
          if (heads[i].bits > 0 && rate >= kMinUsableRateBps)
            times[i] = std::min(share, heads[i].bits / rate);
        }
      } else {
        const auto allocation =
            acs_solve(net, clusters, head_bits, channel, c0, params, cad_s);
        powers = allocation.per_head_power_w;
        times = allocation.per_head_time_s;
      }

      double moved_total = 0;
      double used_s = 0;
      for (size_t i = 0; i < heads.size(); ++i) {
        const double t = times[i];
        if (t <= 0 || powers[i] <= 0) continue;
        const double rate = head_rate(heads[i], channel, powers[i]);
        const double moved = std::min(rate * t, head_bits[i]);
        round.tx_j += transmission_energy(powers[i], heads[i].circuit_power_w,
                                          params.amplifier_efficiency, t);
        round.rx_j += reception_energy(params.rx_energy_j_per_bit, moved);
        round.bits_delivered += moved;
        head_bits[i] -= moved;
        moved_total += moved;
        used_s += t;
      }
      if (options.sensing == SensingMode::Strict) {
        if (!truth.idle || truth.remaining_idle_s < used_s) ++round.interference_events;
      }

      if (moved_total <= 0) {
        emit_c0_round(round);
        return result;
      }
      accessed = true;
      result.ledger += round;
      result.transcript.push_back({-1, prospect.channel_id, round});
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
