#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wsnsim/metrics.hpp"
#include "wsnsim/simulator.hpp"

namespace wsnsim {

// Floating-point rendering used in CSV bodies: 9 significant digits, plain
// printf "g" shaping. Fixed per release so identical runs emit identical
// bytes.
std::string format_g9(double v);

// Shortest round-trip rendering, used where values must be re-parseable
// (metadata echo).
std::string format_exact(double v);

// One row per round under the header
// round,alive,ch_count,packets_to_ch,packets_to_bs,energy_consumed_j,total_residual_j
void write_timeseries_csv(std::ostream& out,
                          const std::vector<RoundOutcome>& series);

// Per-run summary rows under the header
// strategy,seed,first_death,half_death,last_death,packets_to_bs,packets_to_ch,rounds,truncated
void write_summary_header(std::ostream& out);
void write_summary_row(std::ostream& out, Strategy strategy,
                       std::uint64_t seed, const SimSummary& summary);

// Cross-seed medians and interquartile ranges, one row per sweep.
void write_aggregate_csv(std::ostream& out,
                         const std::vector<SweepResult>& sweeps);

// Aggregate rows plus per-metric ranks (1 = largest median).
void write_comparison_csv(std::ostream& out, const Comparison& comparison);

// Plain key=value sidecar: artifact version, generator identity, the full
// config echo (same keys the config file uses), any overrides in the order
// applied, and the seed list.
void write_metadata(std::ostream& out, const SimConfig& config,
                    const std::vector<std::string>& overrides,
                    const std::vector<std::uint64_t>& seeds);

}  // namespace wsnsim
