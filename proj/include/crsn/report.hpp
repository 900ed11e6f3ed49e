#pragma once

#include <string>
#include <vector>

#include "crsn/sim.hpp"

namespace crsn {

// Byte-stable CSV of every transcript row of a report; fixed column order:
// scenario_digest, seed, period, phase, cluster_id, strategy, channel_id,
// sensing_j, switching_j, tx_j, rx_j, bits_delivered, interference_events.
std::string transcript_csv_header();
std::string transcript_csv(const SimulationReport& report);

struct SweepRow {
  std::string sweep_name;
  double sweep_value = 0;
  std::string strategy;
  double mean_energy_j = 0;
  double ci95_j = 0;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);

// Run manifest: config digest, seed list, artifact metadata.
std::string run_manifest_json(const ScenarioConfig& config,
                              const std::vector<std::uint64_t>& seeds);

// Writes via a temporary file and renames, so failed runs leave no partial
// output behind.
void write_file_atomic(const std::string& path, const std::string& content);

std::string format_number(double value);

}  // namespace crsn
