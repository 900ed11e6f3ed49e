#pragma once

#include <cstdint>
#include <vector>

#include "crsn/report.hpp"

namespace crsn {

// One sweep point applied to a copy of the base scenario. For CadMs the value
// is in milliseconds, for ChannelCount it is rounded to an integer, for
// DataScale it multiplies the backlog mean (variance scales quadratically so
// the coefficient of variation is preserved).
ScenarioConfig apply_sweep_point(ScenarioConfig config, double value);

// Aggregated figure sweep. Dispatches on the scenario kind:
//  - Simulation: full runs over `seeds` root seeds per point, mean and CI95
//    of the per-seed strategy totals (phase-filtered for the single-phase
//    loss sweeps).
//  - AllocationIntra / AllocationInter: allocation-level objective vs CAD,
//    proposed against the equal-split baseline on one sampled instance per
//    seed.
//  - AcsTrace: objective value per iteration on one sampled instance.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config);

// ACS objective after each alternation step on one sampled instance; index 0
// is the start point.
std::vector<double> acs_objective_trace(const ScenarioConfig& config, std::uint64_t seed,
                                        double cad_s, double omega_j = 1e-6,
                                        int max_iterations = 50);

}  // namespace crsn
