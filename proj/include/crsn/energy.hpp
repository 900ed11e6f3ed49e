#pragma once

#include <vector>

#include "crsn/core.hpp"

namespace crsn {

// Shannon rate B*log2(1 + h^2 P / sigma^2) in bits/s.
double transmission_rate(double bandwidth_hz, double gain, double power_w, double noise_w);

// Transmit energy (P + alpha_c) * t / eta.
double transmission_energy(double power_w, double circuit_power_w, double efficiency,
                           double duration_s);

double reception_energy(double rx_energy_j_per_bit, double bits);

// Energy consumption rate in J per delivered bit: e_c + (P + alpha_c)/(eta*R).
// Used as ER1 for members and ER2 for heads.
double energy_rate(double power_w, double circuit_power_w, double efficiency,
                   double rx_energy_j_per_bit, double rate_bps);

// Rate of node j toward its destination over the given channel, at its C0 power.
double node_rate(const SensorNode& node, const Channel& channel);

// ER1 for a cluster member on C0.
double intra_energy_rate(const Network& net, int member_id, const Channel& c0,
                         const CognitiveParams& params);

// ER2 for a cluster head on C0.
double inter_energy_rate(const Network& net, const ClusterState& cluster, const Channel& c0,
                         const CognitiveParams& params);

// Control-channel intra baseline: sum over members of A_j' * ER1_j / (1 - lambda_{j,i,0}).
double baseline_intra_energy(const Network& net, const ClusterState& cluster,
                             const Channel& c0, const CognitiveParams& params);

// Control-channel inter baseline over heads with aggregated backlogs head_bits[i] = A_i.
double baseline_inter_energy(const Network& net, const std::vector<ClusterState>& clusters,
                             const std::vector<double>& head_bits, const Channel& c0,
                             const CognitiveParams& params);

// Aggregated inter-phase backlog per cluster: psi_i * sum_j A_j.
std::vector<double> aggregated_head_bits(const Network& net,
                                         const std::vector<ClusterState>& clusters);

}  // namespace crsn
