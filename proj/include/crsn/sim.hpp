#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crsn/config.hpp"
#include "crsn/inter.hpp"

namespace crsn {

// Counter-based stream split: one root seed, independent child streams per
// (period, cluster/purpose, strategy), so adding a strategy never perturbs
// another strategy's draws.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b, std::uint64_t c);
std::mt19937_64 make_stream(std::uint64_t root, std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct PeriodRecord {
  int period = 0;
  StrategyKind strategy = StrategyKind::Proposed;
  std::vector<EnergyLedger> intra_ledgers;  // one per cluster
  EnergyLedger inter_ledger;
  std::vector<TranscriptRecord> intra_transcript;
  std::vector<TranscriptRecord> inter_transcript;

  double intra_total_j() const;
  double inter_total_j() const;
  double total_j() const { return intra_total_j() + inter_total_j(); }
};

struct SimulationReport {
  std::string config_digest;
  std::uint64_t seed = 0;
  std::vector<PeriodRecord> periods;

  double total_j(StrategyKind kind) const;
  double intra_total_j(StrategyKind kind) const;
  double inter_total_j(StrategyKind kind) const;
};

// Random disc deployment per the scenario: sink at center, heads nearest the
// angular-sector centroids, members attached to the nearest head, per-link
// per-channel gains gamma * d^-mu with gamma ~ Exp(1).
Network sample_topology(const ScenarioConfig& config, std::mt19937_64& rng);

std::vector<Channel> build_channels(const ScenarioConfig& config, std::mt19937_64& rng);

// One transmission period for one strategy: regenerates backlogs, runs the
// intra phase per cluster and the inter phase over the heads.
PeriodRecord run_period(const Network& topology, const std::vector<Channel>& channels,
                        const ScenarioConfig& config, StrategyKind strategy, int period,
                        std::uint64_t root_seed);

// Full deterministic run of one (config, seed) pair across all strategies.
SimulationReport run_scenario(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace crsn
