#include "wsnsim/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace wsnsim {

namespace {

MetricStats stats_of(std::vector<double> values) {
  MetricStats s;
  s.median = quantile(values, 0.5);
  s.q1 = quantile(values, 0.25);
  s.q3 = quantile(std::move(values), 0.75);
  s.iqr = s.q3 - s.q1;
  return s;
}

template <typename Get>
MetricStats stats_over(const std::vector<SimSummary>& summaries, Get get) {
  std::vector<double> values;
  values.reserve(summaries.size());
  for (const SimSummary& s : summaries) {
    values.push_back(static_cast<double>(get(s)));
  }
  return stats_of(std::move(values));
}

// Row indices ordered by descending median; stable, so ties keep input order.
template <typename Key>
std::vector<int> rank_rows(const std::vector<SweepResult>& rows, Key key) {
  std::vector<int> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return key(rows[static_cast<std::size_t>(lhs)]) >
           key(rows[static_cast<std::size_t>(rhs)]);
  });
  return order;
}

// First config field differing from base, ignoring strategy and seed;
// nullptr when none.
const char* shared_param_mismatch(const SimConfig& c, const SimConfig& base) {
  if (c.n_nodes != base.n_nodes) return "sim.n_nodes";
  if (c.field_side != base.field_side) return "sim.field_side";
  if (c.bs_x != base.bs_x) return "sim.bs_x";
  if (c.bs_y != base.bs_y) return "sim.bs_y";
  if (c.max_rounds != base.max_rounds) return "sim.max_rounds";
  if (c.radio.e_elec != base.radio.e_elec) return "radio.e_elec";
  if (c.radio.eps_fs != base.radio.eps_fs) return "radio.eps_fs";
  if (c.radio.eps_mp != base.radio.eps_mp) return "radio.eps_mp";
  if (c.radio.e_da != base.radio.e_da) return "radio.e_da";
  if (c.radio.packet_bits != base.radio.packet_bits) return "radio.packet_bits";
  if (c.het.m != base.het.m) return "het.m";
  if (c.het.m0 != base.het.m0) return "het.m0";
  if (c.het.m1 != base.het.m1) return "het.m1";
  if (c.het.a != base.het.a) return "het.a";
  if (c.het.b != base.het.b) return "het.b";
  if (c.het.u != base.het.u) return "het.u";
  if (c.het.e0 != base.het.e0) return "het.e0";
  if (c.het.p_opt != base.het.p_opt) return "het.p_opt";
  return nullptr;
}

}  // namespace

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::domain_error("quantile: empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("quantile: q out of [0,1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

SimSummary summarize(const std::vector<RoundOutcome>& series, int n_nodes) {
  if (series.empty()) throw std::domain_error("summarize: empty series");
  if (n_nodes < 1) throw std::domain_error("summarize: n_nodes must be >= 1");
  SimSummary s;
  s.rounds_simulated = static_cast<std::int64_t>(series.size());
  std::int64_t first = -1;
  std::int64_t half = -1;
  std::int64_t last = -1;
  for (const RoundOutcome& o : series) {
    if (first < 0 && o.alive < n_nodes) first = o.round;
    if (half < 0 && o.alive <= n_nodes / 2) half = o.round;
    if (last < 0 && o.alive == 0) last = o.round;
    s.total_packets_to_bs += o.packets_to_bs;
    s.total_packets_to_ch += o.packets_to_ch;
  }
  s.truncated = last < 0;
  s.first_death_round = first >= 0 ? first : s.rounds_simulated;
  s.half_death_round = half >= 0 ? half : s.rounds_simulated;
  s.last_death_round = last >= 0 ? last : s.rounds_simulated;
  return s;
}

SweepResult sweep(const SimConfig& config,
                  const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("sweep: seed list is empty");
  config.validate();

  SweepResult result;
  result.strategy = config.strategy;
  result.seeds = seeds;
  result.summaries.resize(seeds.size());

  // Runs are independent; hand seed indices to a small pool. Each slot is
  // written by exactly one worker, so the only shared state is the counter.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < seeds.size();
           i = next.fetch_add(1)) {
        SimConfig c = config;
        c.seed = seeds[i];
        result.summaries[i] = run(c).summary;
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t n_threads =
      std::min<std::size_t>(seeds.size(), hw > 0 ? hw : 1);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.first_death = stats_over(result.summaries, [](const SimSummary& s) {
    return s.first_death_round;
  });
  result.half_death = stats_over(result.summaries, [](const SimSummary& s) {
    return s.half_death_round;
  });
  result.last_death = stats_over(result.summaries, [](const SimSummary& s) {
    return s.last_death_round;
  });
  result.packets_to_bs = stats_over(result.summaries, [](const SimSummary& s) {
    return s.total_packets_to_bs;
  });
  result.packets_to_ch = stats_over(result.summaries, [](const SimSummary& s) {
    return s.total_packets_to_ch;
  });
  return result;
}

Comparison compare(const std::vector<SimConfig>& configs,
                   const std::vector<std::uint64_t>& seeds) {
  if (configs.empty()) throw std::invalid_argument("compare: config list is empty");
  if (seeds.empty()) throw std::invalid_argument("compare: seed list is empty");
  const SimConfig& base = configs.front();
  bool seen[4] = {false, false, false, false};
  for (const SimConfig& c : configs) {
    if (const char* field = shared_param_mismatch(c, base)) {
      throw std::invalid_argument(
          std::string("compare: configs must differ only in strategy "
                      "(mismatch on ") + field + ")");
    }
    const auto idx = static_cast<std::size_t>(c.strategy);
    if (seen[idx]) {
      throw std::invalid_argument("compare: duplicate strategy " +
                                  to_string(c.strategy));
    }
    seen[idx] = true;
  }

  Comparison table;
  table.rows.reserve(configs.size());
  for (const SimConfig& c : configs) {
    table.rows.push_back(sweep(c, seeds));  // identical seeds: paired design
  }
  table.rank_first_death = rank_rows(table.rows, [](const SweepResult& r) {
    return r.first_death.median;
  });
  table.rank_last_death = rank_rows(table.rows, [](const SweepResult& r) {
    return r.last_death.median;
  });
  table.rank_packets_to_bs = rank_rows(table.rows, [](const SweepResult& r) {
    return r.packets_to_bs.median;
  });
  return table;
}

}  // namespace wsnsim
