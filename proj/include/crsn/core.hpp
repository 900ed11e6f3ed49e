#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crsn {

// All quantities are SI: bits, joules, watts, seconds, hertz.
// Config-level Kb/mW/nJ/ms values are converted once at ingestion.

enum class CadMode { Derived, FixedDistribution };

struct Channel {
  int id = 0;  // 0 is the license-free channel C0
  double bandwidth_hz = 0;
  double noise_power_w = 0;
  double mean_idle_s = 0;   // licensed only
  double mean_busy_s = 0;   // licensed only
  double false_alarm_prob = 0;  // fused F_f when set directly
  CadMode cad_mode = CadMode::Derived;
  double cad_mean_s = 0;
  double cad_var_s2 = 0;

  Channel() = default;
  Channel(int id_, double bandwidth_hz_, double noise_power_w_,
          double mean_idle_s_, double mean_busy_s_, double false_alarm_prob_,
          CadMode cad_mode_ = CadMode::Derived, double cad_mean_s_ = 0,
          double cad_var_s2_ = 0)
      : id(id_),
        bandwidth_hz(bandwidth_hz_),
        noise_power_w(noise_power_w_),
        mean_idle_s(mean_idle_s_),
        mean_busy_s(mean_busy_s_),
        false_alarm_prob(false_alarm_prob_),
        cad_mode(cad_mode_),
        cad_mean_s(cad_mean_s_),
        cad_var_s2(cad_var_s2_) {
    if (bandwidth_hz <= 0) throw std::invalid_argument("Channel: bandwidth must be > 0");
    if (noise_power_w <= 0) throw std::invalid_argument("Channel: noise power must be > 0");
    if (false_alarm_prob < 0 || false_alarm_prob >= 1)
      throw std::invalid_argument("Channel: false alarm probability must be in [0,1)");
    if (licensed()) {
      if (mean_idle_s <= 0 || mean_busy_s <= 0)
        throw std::invalid_argument("Channel: licensed channel needs positive idle/busy means");
    } else {
      if (mean_idle_s != 0 || mean_busy_s != 0)
        throw std::invalid_argument("Channel: C0 carries no PU statistics");
    }
  }

  bool licensed() const { return id != 0; }
  double idle_prob() const { return mean_idle_s / (mean_idle_s + mean_busy_s); }
  double busy_prob() const { return mean_busy_s / (mean_idle_s + mean_busy_s); }
};

struct SensorNode {
  int id = 0;
  int cluster_id = 0;
  double tx_power_w = 0;       // P_j over C0 (fixed for CMs; C0 power for CHs)
  double circuit_power_w = 0;  // equivalent circuit power alpha_c
  double data_bits = 0;        // A_j generated this period
  std::map<int, double> detection_prob;  // channel id -> per-node p_d
  std::map<int, double> link_gain;       // channel id -> h^2 toward destination

  SensorNode() = default;
  SensorNode(int id_, int cluster_id_, double tx_power_w_, double circuit_power_w_,
             double data_bits_, std::map<int, double> detection_prob_,
             std::map<int, double> link_gain_)
      : id(id_),
        cluster_id(cluster_id_),
        tx_power_w(tx_power_w_),
        circuit_power_w(circuit_power_w_),
        data_bits(data_bits_),
        detection_prob(std::move(detection_prob_)),
        link_gain(std::move(link_gain_)) {
    if (tx_power_w <= 0) throw std::invalid_argument("SensorNode: tx power must be > 0");
    if (circuit_power_w < 0) throw std::invalid_argument("SensorNode: circuit power must be >= 0");
    if (data_bits < 0) throw std::invalid_argument("SensorNode: data amount must be >= 0");
    for (const auto& [ch, pd] : detection_prob)
      if (pd <= 0 || pd > 1)
        throw std::invalid_argument("SensorNode: detection probability must be in (0,1]");
    for (const auto& [ch, g] : link_gain)
      if (g < 0) throw std::invalid_argument("SensorNode: channel gain must be >= 0");
  }
};

struct ClusterState {
  int head_id = -1;
  std::vector<int> member_ids;
  std::map<int, double> packet_loss_c0;  // member id -> lambda_{j,i,0}
  double head_loss_c0 = 0;               // lambda_{i,s,0}
  double aggregation_rate = 1.0;         // psi_i
  std::map<int, double> residual_bits;   // member id -> A_j'

  ClusterState() = default;
  ClusterState(int head_id_, std::vector<int> member_ids_,
               std::map<int, double> packet_loss_c0_, double head_loss_c0_,
               double aggregation_rate_, std::map<int, double> residual_bits_)
      : head_id(head_id_),
        member_ids(std::move(member_ids_)),
        packet_loss_c0(std::move(packet_loss_c0_)),
        head_loss_c0(head_loss_c0_),
        aggregation_rate(aggregation_rate_),
        residual_bits(std::move(residual_bits_)) {
    for (int m : member_ids)
      if (m == head_id) throw std::invalid_argument("ClusterState: head cannot be a member");
    for (const auto& [m, loss] : packet_loss_c0)
      if (loss < 0 || loss >= 1)
        throw std::invalid_argument(
            "ClusterState: packet loss rate 1 makes expected retransmissions diverge");
    if (head_loss_c0 < 0 || head_loss_c0 >= 1)
      throw std::invalid_argument("ClusterState: head packet loss must be in [0,1)");
    if (aggregation_rate <= 0 || aggregation_rate > 1)
      throw std::invalid_argument("ClusterState: aggregation rate must be in (0,1]");
    for (const auto& [m, bits] : residual_bits)
      if (bits < 0) throw std::invalid_argument("ClusterState: residual bits must be >= 0");
  }

  double loss(int member_id) const { return packet_loss_c0.at(member_id); }
  double residual(int member_id) const { return residual_bits.at(member_id); }
};

struct EnergyLedger {
  double sensing_j = 0;
  double switching_j = 0;
  double tx_j = 0;
  double rx_j = 0;
  double bits_delivered = 0;
  long interference_events = 0;

  double total() const { return sensing_j + switching_j + tx_j + rx_j; }

  EnergyLedger& operator+=(const EnergyLedger& o) {
    sensing_j += o.sensing_j;
    switching_j += o.switching_j;
    tx_j += o.tx_j;
    rx_j += o.rx_j;
    bits_delivered += o.bits_delivered;
    interference_events += o.interference_events;
    return *this;
  }
};

struct CognitiveParams {
  double sense_energy_j = 0;      // e_s, per sensing node per channel
  double switch_energy_j = 0;     // e_w, per radio per switch
  double rx_energy_j_per_bit = 0; // e_c
  double amplifier_efficiency = 1.0;  // eta
  double pu_protection = 0.05;        // p_r
  double interference_threshold = 0.1;  // F_I
  int coop_set_size = 1;  // |y|
  double max_power_w = 0.2;  // P_max for CHs on licensed channels

  CognitiveParams() = default;
  CognitiveParams(double es, double ew, double ec, double eta, double pr, double fi,
                  int coop, double pmax)
      : sense_energy_j(es),
        switch_energy_j(ew),
        rx_energy_j_per_bit(ec),
        amplifier_efficiency(eta),
        pu_protection(pr),
        interference_threshold(fi),
        coop_set_size(coop),
        max_power_w(pmax) {
    if (sense_energy_j <= 0 || switch_energy_j <= 0 || rx_energy_j_per_bit <= 0)
      throw std::invalid_argument("CognitiveParams: energy costs must be > 0");
    if (amplifier_efficiency <= 0 || amplifier_efficiency > 1)
      throw std::invalid_argument("CognitiveParams: amplifier efficiency must be in (0,1]");
    if (pu_protection <= 0 || pu_protection >= 1)
      throw std::invalid_argument("CognitiveParams: PU protection must be in (0,1)");
    if (interference_threshold <= 0 || interference_threshold >= 1)
      throw std::invalid_argument("CognitiveParams: interference threshold must be in (0,1)");
    if (coop_set_size < 1)
      throw std::invalid_argument("CognitiveParams: at least one sensing node required");
    if (max_power_w <= 0) throw std::invalid_argument("CognitiveParams: max power must be > 0");
  }
};

// A full built scenario instance: nodes indexed by id, clusters by cluster_id.
struct Network {
  std::vector<SensorNode> nodes;
  std::vector<ClusterState> clusters;

  const SensorNode& node(int id) const { return nodes.at(static_cast<size_t>(id)); }
};

inline const Channel& channel_by_id(const std::vector<Channel>& channels, int id) {
  for (const auto& ch : channels)
    if (ch.id == id) return ch;
  throw std::out_of_range("channel_by_id: unknown channel " + std::to_string(id));
}

// Report-style scenario validation over built domain objects. Constructor
// validation already rejects malformed individual values; this checks the
// cross-object invariants.
std::vector<std::string> validate_scenario(const Network& net,
                                           const std::vector<Channel>& channels,
                                           const CognitiveParams& params);

}  // namespace crsn
