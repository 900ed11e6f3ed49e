#include "crsn/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace crsn {

using nlohmann::json;

std::vector<double> SweepSpec::points() const {
  std::vector<double> values;
  if (variable == SweepVariable::None) return values;
  if (step <= 0) throw std::domain_error("sweep step must be > 0");
  for (double v = start; v <= stop + 0.5 * step; v += step) values.push_back(v);
  return values;
}

CognitiveParams ScenarioConfig::cognitive() const {
  return CognitiveParams(sense_energy_j, switch_energy_j, rx_energy_j_per_bit,
                         amplifier_efficiency, pu_protection, interference_threshold,
                         coop_set_size, max_power_w);
}

Channel ScenarioConfig::c0() const {
  return Channel(0, c0_bandwidth_hz, c0_bandwidth_hz * noise_density_w_per_hz, 0, 0, 0);
}

std::vector<std::string> validate_scenario(const ScenarioConfig& config) {
  std::vector<std::string> report;
  auto check = [&report](bool ok, const std::string& msg) {
    if (!ok) report.push_back(msg);
  };
  check(config.node_count > 0, "topology.node_count must be > 0");
  check(config.radius_m > 0, "topology.radius_m must be > 0");
  check(config.cluster_count > 0, "topology.cluster_count must be > 0");
  check(config.cluster_count <= config.node_count,
        "topology.cluster_count cannot exceed node_count");
  check(config.data_bits_mean > 0, "topology.data_kb_mean must be > 0");
  check(config.data_bits_var >= 0, "topology.data_kb_var must be >= 0");
  check(config.aggregation_rate > 0 && config.aggregation_rate <= 1,
        "topology.aggregation_rate must be in (0,1]");
  check(config.channel_count >= 0, "channels.count must be >= 0");
  check(config.bandwidth_hz_mean > 0, "channels.bandwidth_mhz_mean must be > 0");
  check(config.bandwidth_hz_var >= 0, "channels.bandwidth_mhz_var must be >= 0");
  check(config.c0_bandwidth_hz > 0, "channels.c0_bandwidth_mhz must be > 0");
  check(config.noise_density_w_per_hz > 0, "channels.noise_density_w_per_hz must be > 0");
  check(config.p_on > 0 && config.p_on < 1, "channels.p_on must be in (0,1)");
  check(config.mean_idle_s > 0, "channels.mean_idle_ms must be > 0");
  check(config.false_alarm_prob >= 0 && config.false_alarm_prob < 1,
        "channels.false_alarm_prob must be in [0,1)");
  check(config.detection_prob > 0 && config.detection_prob <= 1,
        "channels.detection_prob must be in (0,1]");
  if (config.cad_mode == CadMode::FixedDistribution) {
    check(config.cad_mean_s > 0, "channels.cad_mean_ms must be > 0");
    check(config.cad_var_s2 >= 0, "channels.cad_var_ms2 must be >= 0");
  }
  check(config.member_power_w > 0, "cognitive.member_power_mw must be > 0");
  check(config.head_power_w > 0, "cognitive.head_power_mw must be > 0");
  check(config.max_power_w > 0, "cognitive.max_power_mw must be > 0");
  check(config.circuit_power_w >= 0, "cognitive.circuit_power_mw must be >= 0");
  check(config.amplifier_efficiency > 0 && config.amplifier_efficiency <= 1,
        "cognitive.amplifier_efficiency must be in (0,1]");
  check(config.rx_energy_j_per_bit > 0, "cognitive.rx_energy_nj_per_bit must be > 0");
  check(config.sense_energy_j > 0, "cognitive.sense_energy_j must be > 0");
  check(config.switch_energy_j > 0, "cognitive.switch_energy_j must be > 0");
  check(config.pu_protection > 0 && config.pu_protection < 1,
        "cognitive.pu_protection must be in (0,1)");
  check(config.interference_threshold > 0 && config.interference_threshold < 1,
        "cognitive.interference_threshold must be in (0,1)");
  check(config.coop_set_size >= 1, "cognitive.coop_set_size: at least one sensing node required");
  if (config.node_count > 0 && config.cluster_count > 0) {
    // conservative bound; the exact per-cluster check happens on the built network
    check(config.coop_set_size <= config.node_count,
          "cognitive.coop_set_size cannot exceed node count");
  }
  if (config.intra_loss >= 1 || config.intra_loss < 0)
    report.push_back("link.intra_loss of 1 makes the expected retransmission count diverge");
  if (config.inter_loss >= 1 || config.inter_loss < 0)
    report.push_back("link.inter_loss of 1 makes the expected retransmission count diverge");
  check(config.path_loss_exponent > 0, "link.path_loss_exponent must be > 0");
  check(!config.strategies.empty(), "experiment.strategies must not be empty");
  check(config.periods >= 0, "experiment.periods must be >= 0");
  check(config.seeds >= 1, "experiment.seeds must be >= 1");
  if (config.sweep.variable != SweepVariable::None)
    check(config.sweep.step > 0 && config.sweep.stop >= config.sweep.start,
          "experiment.sweep range must be non-empty with positive step");
  return report;
}

namespace {

void reject_unknown_keys(const json& object, const std::vector<std::string>& allowed,
                         const std::string& scope) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const auto& a : allowed)
      if (key == a) known = true;
    if (!known) throw std::runtime_error("unknown key '" + scope + "." + key + "'");
  }
}

const json& require(const json& object, const std::string& key, const std::string& scope) {
  auto it = object.find(key);
  if (it == object.end())
    throw std::runtime_error("missing required field '" + scope + "." + key + "'");
  return *it;
}

double get_num(const json& object, const std::string& key, const std::string& scope) {
  const json& v = require(object, key, scope);
  if (!v.is_number()) throw std::runtime_error("field '" + scope + "." + key + "' must be numeric");
  return v.get<double>();
}

double get_num_or(const json& object, const std::string& key, double fallback) {
  auto it = object.find(key);
  return it == object.end() ? fallback : it->get<double>();
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "loss_rate") return SweepVariable::LossRate;
  if (name == "loss_rate_intra") return SweepVariable::LossRateIntra;
  if (name == "loss_rate_inter") return SweepVariable::LossRateInter;
  if (name == "cad_ms") return SweepVariable::CadMs;
  if (name == "channel_count") return SweepVariable::ChannelCount;
  if (name == "data_scale") return SweepVariable::DataScale;
  throw std::runtime_error("unknown sweep variable '" + name + "'");
}

ScenarioKind parse_kind(const std::string& name) {
  if (name == "simulation") return ScenarioKind::Simulation;
  if (name == "allocation_intra") return ScenarioKind::AllocationIntra;
  if (name == "allocation_inter") return ScenarioKind::AllocationInter;
  if (name == "acs_trace") return ScenarioKind::AcsTrace;
  throw std::runtime_error("unknown scenario kind '" + name + "'");
}

}  // namespace

StrategyKind parse_strategy(const std::string& name) {
  if (name == "proposed") return StrategyKind::Proposed;
  if (name == "c0_only") return StrategyKind::C0Only;
  if (name == "asa") return StrategyKind::ASA;
  if (name == "average") return StrategyKind::AverageAllocation;
  throw std::runtime_error("unknown strategy '" + name + "'");
}

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Proposed: return "proposed";
    case StrategyKind::C0Only: return "c0_only";
    case StrategyKind::ASA: return "asa";
    case StrategyKind::AverageAllocation: return "average";
  }
  return "unknown";
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }

  reject_unknown_keys(doc, {"name", "kind", "topology", "channels", "cognitive", "link",
                            "experiment"},
                      "config");

  ScenarioConfig config;
  config.name = require(doc, "name", "config").get<std::string>();
  config.kind = parse_kind(doc.value("kind", "simulation"));

  const json& topo = require(doc, "topology", "config");
  reject_unknown_keys(topo, {"node_count", "radius_m", "cluster_count", "data_kb_mean",
                             "data_kb_var", "aggregation_rate"},
                      "topology");
  config.node_count = static_cast<int>(get_num(topo, "node_count", "topology"));
  config.radius_m = get_num(topo, "radius_m", "topology");
  config.cluster_count = static_cast<int>(get_num(topo, "cluster_count", "topology"));
  config.data_bits_mean = get_num(topo, "data_kb_mean", "topology") * 1e3;
  config.data_bits_var = get_num_or(topo, "data_kb_var", 0.0) * 1e6;
  config.aggregation_rate = get_num_or(topo, "aggregation_rate", 1.0);

  const json& chans = require(doc, "channels", "config");
  reject_unknown_keys(chans,
                      {"count", "bandwidth_mhz_mean", "bandwidth_mhz_var", "c0_bandwidth_mhz",
                       "noise_density_w_per_hz", "p_on", "mean_idle_ms", "false_alarm_prob",
                       "detection_prob", "cad_mode", "cad_mean_ms", "cad_var_ms2",
                       "cad_exponent"},
                      "channels");
  config.channel_count = static_cast<int>(get_num(chans, "count", "channels"));
  config.bandwidth_hz_mean = get_num(chans, "bandwidth_mhz_mean", "channels") * 1e6;
  config.bandwidth_hz_var = get_num_or(chans, "bandwidth_mhz_var", 0.0) * 1e12;
  config.c0_bandwidth_hz = get_num(chans, "c0_bandwidth_mhz", "channels") * 1e6;
  config.noise_density_w_per_hz = get_num(chans, "noise_density_w_per_hz", "channels");
  config.p_on = get_num(chans, "p_on", "channels");
  config.mean_idle_s = get_num(chans, "mean_idle_ms", "channels") * 1e-3;
  config.false_alarm_prob = get_num(chans, "false_alarm_prob", "channels");
  config.detection_prob = get_num_or(chans, "detection_prob", 0.95);
  const std::string cad_mode = chans.value("cad_mode", "fixed");
  if (cad_mode == "fixed")
    config.cad_mode = CadMode::FixedDistribution;
  else if (cad_mode == "derived")
    config.cad_mode = CadMode::Derived;
  else
    throw std::runtime_error("channels.cad_mode must be 'fixed' or 'derived'");
  config.cad_mean_s = get_num_or(chans, "cad_mean_ms", 0.0) * 1e-3;
  config.cad_var_s2 = get_num_or(chans, "cad_var_ms2", 0.0) * 1e-6;
  const std::string cad_exp = chans.value("cad_exponent", "mean_inverse");
  if (cad_exp == "mean_inverse")
    config.cad_exponent = CadExponent::MeanInverse;
  else if (cad_exp == "raw_vx")
    config.cad_exponent = CadExponent::RawVx;
  else
    throw std::runtime_error("channels.cad_exponent must be 'mean_inverse' or 'raw_vx'");

  const json& cog = require(doc, "cognitive", "config");
  reject_unknown_keys(cog,
                      {"member_power_mw", "head_power_mw", "max_power_mw", "circuit_power_mw",
                       "amplifier_efficiency", "rx_energy_nj_per_bit", "sense_energy_j",
                       "switch_energy_j", "pu_protection", "interference_threshold",
                       "coop_set_size"},
                      "cognitive");
  config.member_power_w = get_num(cog, "member_power_mw", "cognitive") * 1e-3;
  config.head_power_w = get_num(cog, "head_power_mw", "cognitive") * 1e-3;
  config.max_power_w = get_num(cog, "max_power_mw", "cognitive") * 1e-3;
  config.circuit_power_w = get_num(cog, "circuit_power_mw", "cognitive") * 1e-3;
  config.amplifier_efficiency = get_num(cog, "amplifier_efficiency", "cognitive");
  config.rx_energy_j_per_bit = get_num(cog, "rx_energy_nj_per_bit", "cognitive") * 1e-9;
  config.sense_energy_j = get_num(cog, "sense_energy_j", "cognitive");
  config.switch_energy_j = get_num(cog, "switch_energy_j", "cognitive");
  config.pu_protection = get_num_or(cog, "pu_protection", 0.05);
  config.interference_threshold = get_num_or(cog, "interference_threshold", 0.1);
  config.coop_set_size = static_cast<int>(get_num(cog, "coop_set_size", "cognitive"));

  const json& link = require(doc, "link", "config");
  reject_unknown_keys(link, {"intra_loss", "inter_loss", "path_loss_exponent"}, "link");
  config.intra_loss = get_num(link, "intra_loss", "link");
  config.inter_loss = get_num(link, "inter_loss", "link");
  config.path_loss_exponent = get_num_or(link, "path_loss_exponent", 3.0);

  const json& exp = require(doc, "experiment", "config");
  reject_unknown_keys(exp, {"strategies", "sweep", "periods", "seeds", "root_seed", "mode",
                            "sensing"},
                      "experiment");
  for (const auto& s : require(exp, "strategies", "experiment"))
    config.strategies.push_back(parse_strategy(s.get<std::string>()));
  if (exp.contains("sweep") && !exp.at("sweep").is_null()) {
    const json& sweep = exp.at("sweep");
    reject_unknown_keys(sweep, {"variable", "start", "stop", "step"}, "sweep");
    config.sweep.variable =
        parse_sweep_variable(require(sweep, "variable", "sweep").get<std::string>());
    config.sweep.start = get_num(sweep, "start", "sweep");
    config.sweep.stop = get_num(sweep, "stop", "sweep");
    config.sweep.step = get_num(sweep, "step", "sweep");
  }
  config.periods = static_cast<int>(get_num(exp, "periods", "experiment"));
  config.seeds = static_cast<int>(get_num(exp, "seeds", "experiment"));
  config.root_seed = static_cast<std::uint64_t>(get_num_or(exp, "root_seed", 1.0));
  const std::string mode = exp.value("mode", "expected");
  if (mode == "expected")
    config.accounting = AccountingMode::Expected;
  else if (mode == "sampled")
    config.accounting = AccountingMode::Sampled;
  else
    throw std::runtime_error("experiment.mode must be 'expected' or 'sampled'");
  const std::string sensing = exp.value("sensing", "idealized");
  if (sensing == "idealized")
    config.sensing = SensingMode::Idealized;
  else if (sensing == "strict")
    config.sensing = SensingMode::Strict;
  else
    throw std::runtime_error("experiment.sensing must be 'idealized' or 'strict'");

  const auto violations = validate_scenario(config);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid scenario '" << config.name << "':";
    for (const auto& v : violations) os << "\n  - " << v;
    throw std::runtime_error(os.str());
  }
  return config;
}

std::string config_digest(const ScenarioConfig& config) {
  // Canonical serialization of every field that affects results.
  std::ostringstream os;
  os.precision(17);
  os << config.name << '|' << static_cast<int>(config.kind) << '|' << config.node_count << '|'
     << config.radius_m << '|' << config.cluster_count << '|' << config.data_bits_mean << '|'
     << config.data_bits_var << '|' << config.aggregation_rate << '|' << config.channel_count
     << '|' << config.bandwidth_hz_mean << '|' << config.bandwidth_hz_var << '|'
     << config.c0_bandwidth_hz << '|' << config.noise_density_w_per_hz << '|' << config.p_on
     << '|' << config.mean_idle_s << '|' << config.false_alarm_prob << '|'
     << config.detection_prob << '|' << static_cast<int>(config.cad_mode) << '|'
     << config.cad_mean_s << '|' << config.cad_var_s2 << '|'
     << static_cast<int>(config.cad_exponent) << '|' << config.member_power_w << '|'
     << config.head_power_w << '|' << config.max_power_w << '|' << config.circuit_power_w << '|'
     << config.amplifier_efficiency << '|' << config.rx_energy_j_per_bit << '|'
     << config.sense_energy_j << '|' << config.switch_energy_j << '|' << config.pu_protection
     << '|' << config.interference_threshold << '|' << config.coop_set_size << '|'
     << config.intra_loss << '|' << config.inter_loss << '|' << config.path_loss_exponent << '|';
  for (auto s : config.strategies) os << strategy_name(s) << ',';
  os << '|' << static_cast<int>(config.sweep.variable) << '|' << config.sweep.start << '|'
     << config.sweep.stop << '|' << config.sweep.step << '|' << config.periods << '|'
     << config.seeds << '|' << config.root_seed << '|' << static_cast<int>(config.accounting)
     << '|' << static_cast<int>(config.sensing);

  const std::string canonical = os.str();
  std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << hash;
  return hex.str();
}

}  // namespace crsn
