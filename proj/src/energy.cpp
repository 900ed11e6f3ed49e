#include "crsn/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace crsn {

double transmission_rate(double bandwidth_hz, double gain, double power_w, double noise_w) {
  if (bandwidth_hz <= 0 || noise_w <= 0)
    throw std::domain_error("transmission_rate: bandwidth and noise must be > 0");
  if (power_w < 0 || gain < 0)
    throw std::domain_error("transmission_rate: power and gain must be >= 0");
  return bandwidth_hz * std::log2(1.0 + gain * power_w / noise_w);
}

double transmission_energy(double power_w, double circuit_power_w, double efficiency,
                           double duration_s) {
  if (duration_s < 0) throw std::domain_error("transmission_energy: duration must be >= 0");
  if (efficiency <= 0 || efficiency > 1)
    throw std::domain_error("transmission_energy: efficiency must be in (0,1]");
  return (power_w + circuit_power_w) * duration_s / efficiency;
}

double reception_energy(double rx_energy_j_per_bit, double bits) {
  return rx_energy_j_per_bit * bits;
}

double energy_rate(double power_w, double circuit_power_w, double efficiency,
                   double rx_energy_j_per_bit, double rate_bps) {
  if (rate_bps <= 0) throw std::domain_error("energy_rate: rate must be > 0");
  return rx_energy_j_per_bit + (power_w + circuit_power_w) / (efficiency * rate_bps);
}

double node_rate(const SensorNode& node, const Channel& channel) {
  auto it = node.link_gain.find(channel.id);
  const double gain = it == node.link_gain.end() ? 0.0 : it->second;
  return transmission_rate(channel.bandwidth_hz, gain, node.tx_power_w, channel.noise_power_w);
}

double intra_energy_rate(const Network& net, int member_id, const Channel& c0,
                         const CognitiveParams& params) {
  const SensorNode& node = net.node(member_id);
  return energy_rate(node.tx_power_w, node.circuit_power_w, params.amplifier_efficiency,
                     params.rx_energy_j_per_bit, node_rate(node, c0));
}

double inter_energy_rate(const Network& net, const ClusterState& cluster, const Channel& c0,
                         const CognitiveParams& params) {
  const SensorNode& head = net.node(cluster.head_id);
  return energy_rate(head.tx_power_w, head.circuit_power_w, params.amplifier_efficiency,
                     params.rx_energy_j_per_bit, node_rate(head, c0));
}

double baseline_intra_energy(const Network& net, const ClusterState& cluster,
                             const Channel& c0, const CognitiveParams& params) {
  double total = 0;
  for (int m : cluster.member_ids) {
    const double bits = cluster.residual(m);
    if (bits <= 0) continue;
    total += bits * intra_energy_rate(net, m, c0, params) / (1.0 - cluster.loss(m));
  }
  return total;
}

double baseline_inter_energy(const Network& net, const std::vector<ClusterState>& clusters,
                             const std::vector<double>& head_bits, const Channel& c0,
                             const CognitiveParams& params) {
  if (head_bits.size() != clusters.size())
    throw std::domain_error("baseline_inter_energy: one backlog per cluster required");
  double total = 0;
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (head_bits[i] <= 0) continue;
    total += head_bits[i] * inter_energy_rate(net, clusters[i], c0, params) /
             (1.0 - clusters[i].head_loss_c0);
  }
  return total;
}

std::vector<double> aggregated_head_bits(const Network& net,
                                         const std::vector<ClusterState>& clusters) {
  std::vector<double> bits(clusters.size(), 0.0);
  for (size_t i = 0; i < clusters.size(); ++i) {
    double sum = 0;
    for (int m : clusters[i].member_ids) sum += net.node(m).data_bits;
    bits[i] = clusters[i].aggregation_rate * sum;
  }
  return bits;
}

}  // namespace crsn
