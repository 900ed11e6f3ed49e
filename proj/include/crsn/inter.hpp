#pragma once

#include <random>
#include <vector>

#include "crsn/core.hpp"
#include "crsn/intra.hpp"

namespace crsn {

struct PowerTimeAllocation {
  std::vector<double> per_head_power_w;
  std::vector<double> per_head_time_s;
  double objective_j = 0;  // full E*_{2,x}: equivalent objective + baseline
  int iterations = 0;
  bool converged = false;
};

struct InterProspect {
  int channel_id = -1;
  double expected_energy_j = 0;
  double cad_s = 0;
  PowerTimeAllocation allocation;
  bool accessible = false;
};

// Per-head view of the PTAP instance over one licensed channel.
struct HeadInstance {
  int head_id = -1;
  double bits = 0;          // A_i
  double loss = 0;          // lambda_{i,s,0}
  double gain = 0;          // h^2_{i,s,x}
  double circuit_power_w = 0;
  double weight = 0;        // W_i = B_x * ER2_i / (1 - lambda_{i,s,0})
};

std::vector<HeadInstance> build_head_instances(const Network& net,
                                               const std::vector<ClusterState>& clusters,
                                               const std::vector<double>& head_bits,
                                               const Channel& channel, const Channel& c0,
                                               const CognitiveParams& params);

// Equivalent PTAP-E objective E'_{2,x} (full objective minus the control-channel baseline).
double equivalent_objective(const std::vector<HeadInstance>& heads, const Channel& channel,
                            const std::vector<double>& powers, const std::vector<double>& times,
                            const CognitiveParams& params);

// Clamped water-filling closed form. Heads with t_i = 0 get P = 0.
std::vector<double> optimal_power_given_time(const std::vector<HeadInstance>& heads,
                                             const Channel& channel,
                                             const std::vector<double>& times,
                                             const CognitiveParams& params);

// PTAP-E2 time step: same greedy structure as TAP with per-head coefficients
// c_i = (P_i + alpha_c)/eta - W_i log2(1 + h^2 P_i / sigma^2).
std::vector<double> optimal_time_given_power(const std::vector<HeadInstance>& heads,
                                             const Channel& channel,
                                             const std::vector<double>& powers,
                                             const CognitiveParams& params, double cad_s);

std::vector<double> ptap_time_coefficients(const std::vector<HeadInstance>& heads,
                                           const Channel& channel,
                                           const std::vector<double>& powers,
                                           const CognitiveParams& params);

// Alternating convex search (Algorithm 2). Start point: equal split of the
// CAD over heads with positive backlog, zero power.
PowerTimeAllocation acs_solve(const Network& net, const std::vector<ClusterState>& clusters,
                              const std::vector<double>& head_bits, const Channel& channel,
                              const Channel& c0, const CognitiveParams& params, double cad_s,
                              double omega_j = 1e-6, int max_iterations = 50);

// Two-branch expectation over the sensing outcome with m = number of clusters.
double expected_inter_energy(const Network& net, const std::vector<ClusterState>& clusters,
                             const std::vector<double>& head_bits, const Channel& channel,
                             const Channel& c0, const PowerTimeAllocation& allocation,
                             const CognitiveParams& params);

std::vector<InterProspect> inter_accessible_channels(
    const Network& net, const std::vector<ClusterState>& clusters,
    const std::vector<double>& head_bits, const std::vector<Channel>& channels,
    const Channel& c0, const CognitiveParams& params,
    CadExponent exponent = CadExponent::MeanInverse);

// Algorithm-3 controller over the cluster heads. head_bits is consumed.
PhaseResult run_inter_phase(const Network& net, const std::vector<ClusterState>& clusters,
                            std::vector<double>& head_bits, const std::vector<Channel>& channels,
                            const Channel& c0, const CognitiveParams& params,
                            const RunOptions& options, std::mt19937_64& rng);

}  // namespace crsn
