#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wsnsim/metrics.hpp"

using namespace wsnsim;

namespace {

RoundOutcome make_round(std::int64_t round, int alive, std::int64_t to_ch = 0,
                        std::int64_t to_bs = 0) {
  RoundOutcome o;
  o.round = round;
  o.alive = alive;
  o.packets_to_ch = to_ch;
  o.packets_to_bs = to_bs;
  return o;
}

}  // namespace

TEST_CASE("quantiles interpolate between order statistics") {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  CHECK(quantile(v, 0.5) == 2.5);
  CHECK(quantile(v, 0.25) == 1.75);
  CHECK(quantile(v, 0.75) == 3.25);
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 4.0);

  CHECK(quantile({5.0, 1.0, 3.0}, 0.5) == 3.0);  // sorts internally
  CHECK(quantile({7.0}, 0.25) == 7.0);

  CHECK_THROWS_AS(quantile({}, 0.5), std::domain_error);
  CHECK_THROWS_AS(quantile(v, -0.1), std::domain_error);
  CHECK_THROWS_AS(quantile(v, 1.1), std::domain_error);
}

TEST_CASE("quantile leaves the input untouched") {
  const std::vector<double> v = {9.0, 1.0, 5.0};
  (void)quantile(v, 0.5);
  CHECK(v == std::vector<double>{9.0, 1.0, 5.0});
}

TEST_CASE("summary marks the three death rounds") {
  const std::vector<RoundOutcome> series = {
      make_round(0, 100, 90, 10), make_round(1, 99, 80, 12),
      make_round(2, 50, 40, 9), make_round(3, 0, 0, 2)};
  const SimSummary s = summarize(series, 100);
  CHECK(s.first_death_round == 1);
  CHECK(s.half_death_round == 2);
  CHECK(s.last_death_round == 3);
  CHECK(s.rounds_simulated == 4);
  CHECK_FALSE(s.truncated);
  CHECK(s.total_packets_to_ch == 210);
  CHECK(s.total_packets_to_bs == 33);
}

TEST_CASE("summary of a truncated run reports the horizon") {
  const std::vector<RoundOutcome> series = {make_round(0, 100),
                                            make_round(1, 100)};
  const SimSummary s = summarize(series, 100);
  CHECK(s.truncated);
  CHECK(s.first_death_round == 2);
  CHECK(s.half_death_round == 2);
  CHECK(s.last_death_round == 2);

  // partial truncation: someone died but the network survived the horizon
  const std::vector<RoundOutcome> partial = {make_round(0, 100),
                                             make_round(1, 70)};
  const SimSummary p = summarize(partial, 100);
  CHECK(p.truncated);
  CHECK(p.first_death_round == 1);
  CHECK(p.half_death_round == 2);
  CHECK(p.last_death_round == 2);
}

TEST_CASE("summary handles first-round wipeout") {
  const std::vector<RoundOutcome> series = {make_round(0, 0, 0, 100)};
  const SimSummary s = summarize(series, 100);
  CHECK(s.first_death_round == 0);
  CHECK(s.half_death_round == 0);
  CHECK(s.last_death_round == 0);
  CHECK_FALSE(s.truncated);
}

TEST_CASE("summarize validates its arguments") {
  CHECK_THROWS_AS(summarize({}, 100), std::domain_error);
  CHECK_THROWS_AS(summarize({make_round(0, 1)}, 0), std::domain_error);
}

TEST_CASE("death rounds are ordered for any alive trajectory") {
  // alive counts only decrease; the three marks must come out ordered
  std::vector<RoundOutcome> series;
  int alive = 10;
  std::int64_t r = 0;
  for (int drop : {0, 1, 0, 3, 2, 0, 4}) {
    alive -= drop;
    series.push_back(make_round(r++, alive));
  }
  const SimSummary s = summarize(series, 10);
  CHECK(s.first_death_round <= s.half_death_round);
  CHECK(s.half_death_round <= s.last_death_round);
  CHECK(s.first_death_round == 1);
  CHECK(s.half_death_round == 4);
  CHECK(s.last_death_round == 6);
}

TEST_CASE("a one-seed sweep reproduces a plain run") {
  SimConfig c;
  c.n_nodes = 30;  // keep it quick
  const std::vector<std::uint64_t> seeds = {123};
  const SweepResult sw = sweep(c, seeds);

  SimConfig single = c;
  single.seed = 123;
  const SimSummary direct = run(single).summary;

  REQUIRE(sw.summaries.size() == 1);
  CHECK(sw.summaries[0].first_death_round == direct.first_death_round);
  CHECK(sw.summaries[0].half_death_round == direct.half_death_round);
  CHECK(sw.summaries[0].last_death_round == direct.last_death_round);
  CHECK(sw.summaries[0].total_packets_to_bs == direct.total_packets_to_bs);
  CHECK(sw.summaries[0].total_packets_to_ch == direct.total_packets_to_ch);
  CHECK(sw.first_death.median ==
        static_cast<double>(direct.first_death_round));
  CHECK(sw.first_death.iqr == 0.0);
  CHECK(sw.strategy == c.strategy);
  CHECK(sw.seeds == seeds);
}

TEST_CASE("sweep results follow seed order, not scheduling order") {
  SimConfig c;
  c.n_nodes = 25;
  const std::vector<std::uint64_t> seeds = {5, 6, 7, 8, 9, 10};
  const SweepResult a = sweep(c, seeds);
  const SweepResult b = sweep(c, seeds);
  REQUIRE(a.summaries.size() == b.summaries.size());
  for (std::size_t i = 0; i < a.summaries.size(); ++i) {
    CHECK(a.summaries[i].first_death_round == b.summaries[i].first_death_round);
    CHECK(a.summaries[i].last_death_round == b.summaries[i].last_death_round);
    CHECK(a.summaries[i].total_packets_to_bs ==
          b.summaries[i].total_packets_to_bs);
  }
  CHECK(a.first_death.median == b.first_death.median);
  CHECK(a.packets_to_bs.q1 == b.packets_to_bs.q1);
  CHECK(a.packets_to_bs.q3 == b.packets_to_bs.q3);

  // reordering the seed list permutes the per-seed rows but not the stats
  std::vector<std::uint64_t> shuffled = {9, 5, 10, 7, 8, 6};
  const SweepResult sh = sweep(c, shuffled);
  CHECK(sh.first_death.median == a.first_death.median);
  CHECK(sh.last_death.q3 == a.last_death.q3);
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    const std::size_t j = static_cast<std::size_t>(
        std::find(seeds.begin(), seeds.end(), shuffled[i]) - seeds.begin());
    CHECK(sh.summaries[i].first_death_round ==
          a.summaries[j].first_death_round);
  }
}

TEST_CASE("sweep rejects an empty seed list") {
  CHECK_THROWS_AS(sweep(SimConfig{}, {}), std::invalid_argument);
}

TEST_CASE("comparison demands aligned configurations") {
  SimConfig deec;
  deec.strategy = Strategy::DEEC;
  SimConfig beenish;
  beenish.strategy = Strategy::BEENISH;

  SimConfig wrong = beenish;
  wrong.n_nodes = 50;
  CHECK_THROWS_WITH_AS(
      compare({deec, wrong}, {1, 2}),
      "compare: configs must differ only in strategy (mismatch on sim.n_nodes)",
      std::invalid_argument);

  wrong = beenish;
  wrong.het.p_opt = 0.2;
  CHECK_THROWS_AS(compare({deec, wrong}, {1, 2}), std::invalid_argument);

  CHECK_THROWS_AS(compare({deec, deec}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(compare({}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(compare({deec, beenish}, {}), std::invalid_argument);
}

TEST_CASE("comparison ranks strategies by median, best first") {
  SimConfig base;
  base.n_nodes = 20;
  base.max_rounds = 4000;
  std::vector<SimConfig> configs;
  for (Strategy s : {Strategy::DEEC, Strategy::BEENISH, Strategy::EDEEC}) {
    SimConfig c = base;
    c.strategy = s;
    configs.push_back(c);
  }
  const std::vector<std::uint64_t> seeds = {11, 12, 13, 14, 15};
  const Comparison table = compare(configs, seeds);

  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].strategy == Strategy::DEEC);
  CHECK(table.rows[1].strategy == Strategy::BEENISH);
  CHECK(table.rows[2].strategy == Strategy::EDEEC);
  for (const SweepResult& row : table.rows) {
    CHECK(row.seeds == seeds);
    CHECK(row.summaries.size() == seeds.size());
  }

  // each rank list is a permutation ordered by descending median
  for (const std::vector<int>* rank :
       {&table.rank_first_death, &table.rank_last_death,
        &table.rank_packets_to_bs}) {
    REQUIRE(rank->size() == 3);
    std::vector<bool> seen(3, false);
    for (int idx : *rank) {
      REQUIRE(idx >= 0);
      REQUIRE(idx < 3);
      CHECK_FALSE(seen[static_cast<std::size_t>(idx)]);
      seen[static_cast<std::size_t>(idx)] = true;
    }
  }
  auto median_of = [&](const std::vector<int>& rank, std::size_t pos,
                       MetricStats SweepResult::* field) {
    return (table.rows[static_cast<std::size_t>(rank[pos])].*field).median;
  };
  for (std::size_t pos = 0; pos + 1 < 3; ++pos) {
    CHECK(median_of(table.rank_first_death, pos, &SweepResult::first_death) >=
          median_of(table.rank_first_death, pos + 1, &SweepResult::first_death));
    CHECK(median_of(table.rank_last_death, pos, &SweepResult::last_death) >=
          median_of(table.rank_last_death, pos + 1, &SweepResult::last_death));
    CHECK(median_of(table.rank_packets_to_bs, pos, &SweepResult::packets_to_bs) >=
          median_of(table.rank_packets_to_bs, pos + 1,
                    &SweepResult::packets_to_bs));
  }
}
