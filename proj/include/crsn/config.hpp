#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crsn/intra.hpp"

namespace crsn {

enum class SweepVariable { None, LossRate, LossRateIntra, LossRateInter, CadMs, ChannelCount, DataScale };

// What the bundled scenario drives: the full period simulation, or one of
// the allocation-level comparisons used by the figure sweeps.
enum class ScenarioKind { Simulation, AllocationIntra, AllocationInter, AcsTrace };

struct SweepSpec {
  SweepVariable variable = SweepVariable::None;
  double start = 0;
  double stop = 0;
  double step = 0;

  std::vector<double> points() const;
};

struct ScenarioConfig {
  std::string name;
  ScenarioKind kind = ScenarioKind::Simulation;

  // topology
  int node_count = 0;
  double radius_m = 0;
  int cluster_count = 0;
  double data_bits_mean = 0;  // per-node backlog ~ N(mean, var), truncated > 0
  double data_bits_var = 0;
  double aggregation_rate = 1.0;

  // channels
  int channel_count = 0;
  double bandwidth_hz_mean = 0;
  double bandwidth_hz_var = 0;
  double c0_bandwidth_hz = 0;
  double noise_density_w_per_hz = 0;
  double p_on = 0;
  double mean_idle_s = 0;  // with p_on fixes mean_busy
  double false_alarm_prob = 0;
  double detection_prob = 0;  // per node per channel
  CadMode cad_mode = CadMode::FixedDistribution;
  double cad_mean_s = 0;
  double cad_var_s2 = 0;
  CadExponent cad_exponent = CadExponent::MeanInverse;

  // cognitive / energy parameters
  double member_power_w = 0;
  double head_power_w = 0;
  double max_power_w = 0;
  double circuit_power_w = 0;
  double amplifier_efficiency = 0;
  double rx_energy_j_per_bit = 0;
  double sense_energy_j = 0;
  double switch_energy_j = 0;
  double pu_protection = 0;
  double interference_threshold = 0;
  int coop_set_size = 0;

  // per-period link conditions
  double intra_loss = 0;
  double inter_loss = 0;
  double path_loss_exponent = 3.0;

  // experiment
  std::vector<StrategyKind> strategies;
  SweepSpec sweep;
  int periods = 0;
  int seeds = 0;
  std::uint64_t root_seed = 1;
  AccountingMode accounting = AccountingMode::Expected;
  SensingMode sensing = SensingMode::Idealized;

  CognitiveParams cognitive() const;
  Channel c0() const;
};

// Report-style validation; empty result iff the scenario is runnable.
std::vector<std::string> validate_scenario(const ScenarioConfig& config);

// Parse + unit-convert + validate a JSON scenario file. Unknown keys are
// rejected; validation failures are reported exhaustively in the exception
// message.
ScenarioConfig load_config(const std::string& path);

// FNV-1a digest of the canonical config serialization; stamped on every
// emitted CSV row so rows from different configs are detectable.
std::string config_digest(const ScenarioConfig& config);

std::string strategy_name(StrategyKind kind);
StrategyKind parse_strategy(const std::string& name);

}  // namespace crsn
