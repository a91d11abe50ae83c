#include "wsnsim/report.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "wsnsim/config.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/version.hpp"

namespace wsnsim {

std::string format_g9(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_exact(double v) {
  char buf[64];
  const std::to_chars_result r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void write_timeseries_csv(std::ostream& out,
                          const std::vector<RoundOutcome>& series) {
  out << "round,alive,ch_count,packets_to_ch,packets_to_bs,"
         "energy_consumed_j,total_residual_j\n";
  for (const RoundOutcome& o : series) {
    out << o.round << ',' << o.alive << ',' << o.ch_count << ','
        << o.packets_to_ch << ',' << o.packets_to_bs << ','
        << format_g9(o.energy_consumed) << ',' << format_g9(o.total_residual)
        << '\n';
  }
}

void write_summary_header(std::ostream& out) {
  out << "strategy,seed,first_death,half_death,last_death,"
         "packets_to_bs,packets_to_ch,rounds,truncated\n";
}

void write_summary_row(std::ostream& out, Strategy strategy,
                       std::uint64_t seed, const SimSummary& summary) {
  out << to_string(strategy) << ',' << seed << ','
      << summary.first_death_round << ',' << summary.half_death_round << ','
      << summary.last_death_round << ',' << summary.total_packets_to_bs << ','
      << summary.total_packets_to_ch << ',' << summary.rounds_simulated << ','
      << (summary.truncated ? 1 : 0) << '\n';
}

namespace {

void write_aggregate_header(std::ostream& out, bool with_ranks) {
  out << "strategy,seeds,first_death_median,first_death_iqr,"
         "half_death_median,half_death_iqr,last_death_median,last_death_iqr,"
         "packets_to_bs_median,packets_to_bs_iqr,"
         "packets_to_ch_median,packets_to_ch_iqr";
  if (with_ranks) out << ",first_death_rank,last_death_rank,packets_to_bs_rank";
  out << '\n';
}

void write_aggregate_fields(std::ostream& out, const SweepResult& row) {
  out << to_string(row.strategy) << ',' << row.seeds.size() << ','
      << format_g9(row.first_death.median) << ',' << format_g9(row.first_death.iqr)
      << ',' << format_g9(row.half_death.median) << ',' << format_g9(row.half_death.iqr)
      << ',' << format_g9(row.last_death.median) << ',' << format_g9(row.last_death.iqr)
      << ',' << format_g9(row.packets_to_bs.median) << ',' << format_g9(row.packets_to_bs.iqr)
      << ',' << format_g9(row.packets_to_ch.median) << ',' << format_g9(row.packets_to_ch.iqr);
}

}  // namespace

void write_aggregate_csv(std::ostream& out,
                         const std::vector<SweepResult>& sweeps) {
  write_aggregate_header(out, false);
  for (const SweepResult& row : sweeps) {
    write_aggregate_fields(out, row);
    out << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const Comparison& comparison) {
  const std::size_t n = comparison.rows.size();
  // rank_* list row indices best-first; invert to a per-row rank number
  std::vector<int> first_rank(n, 0), last_rank(n, 0), packets_rank(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    first_rank[static_cast<std::size_t>(comparison.rank_first_death[pos])] =
        static_cast<int>(pos) + 1;
    last_rank[static_cast<std::size_t>(comparison.rank_last_death[pos])] =
        static_cast<int>(pos) + 1;
    packets_rank[static_cast<std::size_t>(comparison.rank_packets_to_bs[pos])] =
        static_cast<int>(pos) + 1;
  }
  write_aggregate_header(out, true);
  for (std::size_t i = 0; i < n; ++i) {
    write_aggregate_fields(out, comparison.rows[i]);
    out << ',' << first_rank[i] << ',' << last_rank[i] << ',' << packets_rank[i]
        << '\n';
  }
}

void write_metadata(std::ostream& out, const SimConfig& config,
                    const std::vector<std::string>& overrides,
                    const std::vector<std::uint64_t>& seeds) {
  out << "artifact_version=" << kVersion << '\n';
  out << "rng=" << UniformRng::kAlgorithm << '\n';
  for (const auto& [key, value] : config_echo(config)) {
    out << key << '=' << value << '\n';
  }
  int n = 0;
  for (const std::string& o : overrides) {
    out << "override." << ++n << '=' << o << '\n';
  }
  out << "seeds=";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i > 0) out << ',';
    out << seeds[i];
  }
  out << '\n';
}

}  // namespace wsnsim
