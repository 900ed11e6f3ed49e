#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "crsn/core.hpp"

namespace crsn {

struct InfeasibleProtection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ChannelTruth { Idle, Busy };
enum class SensingMode { Idealized, Strict };
enum class CadExponent { MeanInverse, RawVx };

struct SensingOutcome {
  ChannelTruth true_state = ChannelTruth::Idle;
  ChannelTruth declared_state = ChannelTruth::Idle;
  double fused_detection = 0;    // F_d
  double fused_false_alarm = 0;  // F_f
};

struct FusedProbabilities {
  double detection = 0;
  double false_alarm = 0;
};

// Stationary ON/OFF occupancy: p_off = v/(v+l).
double idle_probability(double mean_idle_s, double mean_busy_s);

// Gaussian tail Q(z) = 0.5*erfc(z/sqrt(2)).
double q_function(double z);

// Energy-detector per-node probabilities.
double false_alarm_probability(double threshold, double noise_power,
                               double sense_duration_s, double sample_rate_hz);
double detection_probability(double threshold, double noise_power, double mean_snr,
                             double sense_duration_s, double sample_rate_hz);

// OR-rule fusion: F = 1 - prod(1 - p).
FusedProbabilities cooperative_fusion(const std::vector<double>& per_node_pd,
                                      const std::vector<double>& per_node_pf);

// PU-protection constraint p_on * prod(1 - p_d) <= F_I.
bool pu_protection_satisfied(double p_on, const std::vector<double>& per_node_pd,
                             double interference_threshold);

// Deterministic cooperative-sensing set: the coop_set_size members with the
// highest per-node detection probability on the channel, ties by ascending id.
// Throws InfeasibleProtection when the best set still violates the constraint.
std::vector<int> select_sensing_set(const Network& net, const ClusterState& cluster,
                                    const Channel& channel, const CognitiveParams& params);

// Maximum channel available duration under protection budget p_r, derived
// from the exponential idle-time law (parameterized by 1/mean_idle_s by
// default). nullopt means
// the budget never binds and the channel may be used without a CAD cap.
std::optional<double> channel_available_duration(double p_r, double p_off,
                                                 double fused_false_alarm,
                                                 double mean_idle_s,
                                                 CadExponent exponent = CadExponent::MeanInverse);

struct ChannelStateSample {
  bool idle = false;
  double remaining_idle_s = 0;  // valid only when idle
};

ChannelStateSample sample_channel_state(const Channel& channel, std::mt19937_64& rng);

SensingOutcome sample_sensing_outcome(ChannelTruth true_state, double fused_detection,
                                      double fused_false_alarm, SensingMode mode,
                                      std::mt19937_64& rng);

}  // namespace crsn
