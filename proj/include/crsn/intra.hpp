#pragma once

#include <random>
#include <vector>

#include "crsn/core.hpp"
#include "crsn/spectrum.hpp"

namespace crsn {

enum class StrategyKind { Proposed, C0Only, ASA, AverageAllocation };
enum class AccountingMode { Expected, Sampled };

struct RunOptions {
  StrategyKind strategy = StrategyKind::Proposed;
  AccountingMode accounting = AccountingMode::Expected;
  SensingMode sensing = SensingMode::Idealized;
  CadExponent cad_exponent = CadExponent::MeanInverse;
};

// One structured transcript row: energy charged during one access round
// (channel_id = -1 for the C0 leg / rounds that fell back to C0).
struct TranscriptRecord {
  int cluster_id = -1;  // -1 for the inter phase
  int channel_id = -1;
  EnergyLedger ledger;
};

struct TimeAllocation {
  std::vector<double> per_member_time_s;
  double objective_j = 0;  // E*_{1,x}(i): baseline + sum c_j t_j
};

struct ChannelProspect {
  int channel_id = -1;
  double expected_energy_j = 0;
  double cad_s = 0;
  TimeAllocation allocation;
  bool accessible = false;
};

// Per-member objective coefficients of the TAP linear program:
// c_j = (P_j + alpha_c)/eta - R_{j,i,x} * ER1_j / (1 - lambda_{j,i,0}).
// Members whose licensed rate is below 1 bit/s are treated as zero-capacity
// and get a positive coefficient so they are never allocated.
std::vector<double> tap_coefficients(const Network& net, const ClusterState& cluster,
                                     const Channel& channel, const Channel& c0,
                                     const CognitiveParams& params);

// Greedy optimum of the separable TAP LP: budget cad_s spent on members in
// ascending coefficient order while c_j < 0, each capped at A_j'/R_j.
TimeAllocation tap_solve_greedy(const Network& net, const ClusterState& cluster,
                                const Channel& channel, const Channel& c0,
                                const CognitiveParams& params, double cad_s);

// Same optimum via the general dense simplex solver (oracle and fallback).
TimeAllocation tap_solve_lp(const Network& net, const ClusterState& cluster,
                            const Channel& channel, const Channel& c0,
                            const CognitiveParams& params, double cad_s);

// Two-branch expectation over the sensing outcome:
// F_s (E* + |y| e_s + 2|N_i| e_w) + (1 - F_s)(E_{1,0} + |y| e_s).
double expected_intra_energy(const Network& net, const ClusterState& cluster,
                             const Channel& channel, const Channel& c0,
                             const TimeAllocation& allocation,
                             const CognitiveParams& params);

// Effective CAD used for prospect evaluation: the collision-bounded duration for Derived channels
// (falling back to the full-data duration when the budget never binds),
// the configured mean for FixedDistribution channels.
double prospect_cad_s(const Network& net, const ClusterState& cluster, const Channel& channel,
                      const Channel& c0, const CognitiveParams& params,
                      CadExponent exponent);

// Expected accessible channels, ascending expected energy, ties by id.
std::vector<ChannelProspect> accessible_channels(const Network& net, const ClusterState& cluster,
                                                 const std::vector<Channel>& channels,
                                                 const Channel& c0, const CognitiveParams& params,
                                                 CadExponent exponent = CadExponent::MeanInverse);

struct PhaseResult {
  EnergyLedger ledger;
  std::vector<TranscriptRecord> transcript;
};

// Algorithm-1 controller for one cluster. Mutates residual_bits; under the
// ASA strategy channels are sensed in descending-bandwidth order regardless
// of accessibility; AverageAllocation splits the CAD equally over members
// with residual data.
PhaseResult run_intra_phase(const Network& net, ClusterState& cluster,
                            const std::vector<Channel>& channels, const Channel& c0,
                            const CognitiveParams& params, const RunOptions& options,
                            std::mt19937_64& rng);

}  // namespace crsn
