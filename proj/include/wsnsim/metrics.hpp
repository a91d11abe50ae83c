#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/simulator.hpp"

namespace wsnsim {

struct MetricStats {
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
};

struct SweepResult {
  Strategy strategy = Strategy::BEENISH;
  std::vector<std::uint64_t> seeds;
  std::vector<SimSummary> summaries;  // one per seed, in seed-list order
  MetricStats first_death;
  MetricStats half_death;
  MetricStats last_death;
  MetricStats packets_to_bs;
  MetricStats packets_to_ch;
};

// Paired multi-strategy comparison. rows[i] corresponds to configs[i];
// rank_* hold row indices ordered best-first (largest median first, ties
// keeping input order) for the three headline metrics.
struct Comparison {
  std::vector<SweepResult> rows;
  std::vector<int> rank_first_death;
  std::vector<int> rank_last_death;
  std::vector<int> rank_packets_to_bs;
};

// Quantile of a sample by linear interpolation between order statistics
// (the common "type 7" rule; the 0.5 quantile of an even-sized sample is the
// mean of the two middle values). Sorts a copy. Throws std::domain_error on
// an empty sample or q outside [0,1].
double quantile(std::vector<double> values, double q);

// Death rounds and packet totals of one finished run. first/half/last are
// the first rounds where the alive count drops below n, to n/2 or below
// (integer division), and to zero; an event that never happened is reported
// as rounds_simulated with truncated set. Throws std::domain_error on an
// empty series.
SimSummary summarize(const std::vector<RoundOutcome>& series, int n_nodes);

// Runs config once per seed (seeds may execute concurrently; results are
// deterministic per seed) and aggregates medians and interquartile ranges.
// Throws std::invalid_argument on an empty seed list.
SweepResult sweep(const SimConfig& config, const std::vector<std::uint64_t>& seeds);

// Paired comparison: each config is swept with the identical seed list.
// Configs must agree on everything except strategy and must not repeat a
// strategy; throws std::invalid_argument otherwise.
Comparison compare(const std::vector<SimConfig>& configs,
                   const std::vector<std::uint64_t>& seeds);

}  // namespace wsnsim
