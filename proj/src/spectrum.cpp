#include "crsn/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace crsn {

double idle_probability(double mean_idle_s, double mean_busy_s) {
  if (mean_idle_s <= 0 || mean_busy_s <= 0)
    throw std::domain_error("idle_probability: durations must be > 0");
  return mean_idle_s / (mean_idle_s + mean_busy_s);
}

double q_function(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double false_alarm_probability(double threshold, double noise_power,
                               double sense_duration_s, double sample_rate_hz) {
  if (noise_power <= 0) throw std::domain_error("false_alarm_probability: noise power must be > 0");
  const double samples = sense_duration_s * sample_rate_hz;
  if (samples < 1) throw std::domain_error("false_alarm_probability: need phi*f_s >= 1");
  return q_function((threshold / noise_power - 1.0) * std::sqrt(samples));
}

double detection_probability(double threshold, double noise_power, double mean_snr,
                             double sense_duration_s, double sample_rate_hz) {
  if (noise_power <= 0) throw std::domain_error("detection_probability: noise power must be > 0");
  if (mean_snr < 0) throw std::domain_error("detection_probability: SNR must be >= 0");
  const double samples = sense_duration_s * sample_rate_hz;
  if (samples < 1) throw std::domain_error("detection_probability: need phi*f_s >= 1");
  return q_function((threshold / noise_power - mean_snr - 1.0) *
                    std::sqrt(samples / (2.0 * mean_snr + 1.0)));
}

FusedProbabilities cooperative_fusion(const std::vector<double>& per_node_pd,
                                      const std::vector<double>& per_node_pf) {
  if (per_node_pd.empty() || per_node_pd.size() != per_node_pf.size())
    throw std::domain_error("cooperative_fusion: need non-empty lists of equal length");
  double miss = 1.0, quiet = 1.0;
  for (double pd : per_node_pd) miss *= (1.0 - pd);
  for (double pf : per_node_pf) quiet *= (1.0 - pf);
  return {1.0 - miss, 1.0 - quiet};
}

bool pu_protection_satisfied(double p_on, const std::vector<double>& per_node_pd,
                             double interference_threshold) {
  double miss = 1.0;
  for (double pd : per_node_pd) miss *= (1.0 - pd);
  return p_on * miss <= interference_threshold;
}

std::vector<int> select_sensing_set(const Network& net, const ClusterState& cluster,
                                    const Channel& channel, const CognitiveParams& params) {
  if (cluster.member_ids.size() < static_cast<size_t>(params.coop_set_size))
    throw std::domain_error("select_sensing_set: cluster smaller than sensing set");
  std::vector<int> order = cluster.member_ids;
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
  pds.reserve(order.size());
  for (int id : order) pds.push_back(pd_of(id));
  if (!pu_protection_satisfied(channel.busy_prob(), pds, params.interference_threshold))
    throw InfeasibleProtection("no feasible cooperative sensing set of the configured size");
  return order;
}

std::optional<double> channel_available_duration(double p_r, double p_off,
                                                 double fused_false_alarm,
                                                 double mean_idle_s, CadExponent exponent) {
  if (p_r <= 0) throw std::domain_error("channel_available_duration: p_r must be > 0");
  if (mean_idle_s <= 0) throw std::domain_error("channel_available_duration: mean idle must be > 0");
  const double budget = p_off * (1.0 - fused_false_alarm);
  if (p_r >= budget) return std::nullopt;  // budget never binds
  const double scale =
      exponent == CadExponent::MeanInverse ? mean_idle_s : 1.0 / mean_idle_s;
  return -scale * std::log1p(-p_r / budget);
}

ChannelStateSample sample_channel_state(const Channel& channel, std::mt19937_64& rng) {
  if (!channel.licensed())
    throw std::domain_error("sample_channel_state: C0 has no PU process");
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  ChannelStateSample sample;
  sample.idle = uniform(rng) < channel.idle_prob();
  if (sample.idle) {
    // Memorylessness of the exponential permits a fresh residual draw.
    std::exponential_distribution<double> residual(1.0 / channel.mean_idle_s);
    sample.remaining_idle_s = residual(rng);
  }
  return sample;
}

SensingOutcome sample_sensing_outcome(ChannelTruth true_state, double fused_detection,
                                      double fused_false_alarm, SensingMode mode,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  SensingOutcome outcome;
  outcome.true_state = true_state;
  outcome.fused_detection = fused_detection;
  outcome.fused_false_alarm = fused_false_alarm;
  if (true_state == ChannelTruth::Idle) {
    outcome.declared_state =
        uniform(rng) < fused_false_alarm ? ChannelTruth::Busy : ChannelTruth::Idle;
  } else if (mode == SensingMode::Idealized) {
    // The analysis neglects misdetection (it is capped by F_I).
    outcome.declared_state = ChannelTruth::Busy;
  } else {
    outcome.declared_state =
        uniform(rng) < fused_detection ? ChannelTruth::Busy : ChannelTruth::Idle;
  }
  return outcome;
}

}  // namespace crsn
