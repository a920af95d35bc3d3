#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "hpfold/bench.hpp"
#include "test_util.hpp"

using namespace hpfold;

namespace {

RunRecord timed(double minutes_taken, bool success, double score = 32.0) {
  RunRecord r;
  r.total_wall_time = minutes_taken * 60.0;
  r.success = success;
  r.best_score = score;
  return r;
}

Problem tiny_problem(double target) {
  return Problem{0, testutil::seq("HPHPPHHPHPPHPHHPPHPH"), target};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("benchmark molecules match the reference table") {
  CHECK(testutil::molecule_checksum() == testutil::kMoleculeChecksum);
  const int targets[10] = {32, 34, 34, 33, 32, 32, 32, 31, 34, 33};
  REQUIRE(benchmark_molecules().size() == 10);
  for (int id = 1; id <= 10; ++id) {
    const BenchmarkMolecule& m = benchmark_molecule(id);
    CHECK(m.id == id);
    CHECK(m.sequence.size() == 48);
    CHECK(m.target_score == targets[id - 1]);
  }
  CHECK_THROWS_AS(benchmark_molecule(0), std::out_of_range);
  CHECK_THROWS_AS(benchmark_molecule(11), std::out_of_range);
}

TEST_CASE("benchmark configurations") {
  const AlgoConfig c1 = benchmark_config(1);
  CHECK(c1.level == 5);
  CHECK(c1.eval_playouts == 20);
  CHECK(c1.ratio == 0.9);
  CHECK(c1.threshold == ThresholdPolicy::Max);
  CHECK(c1.playout.bias == 20.0);
  const AlgoConfig c4 = benchmark_config(4);
  CHECK(c4.level == 4);
  CHECK(c4.eval_playouts == 10);
  CHECK(c4.ratio == 0.97);
  CHECK(c4.threshold == ThresholdPolicy::Mean);
}

TEST_CASE("restart protocol with stub searches") {
  const Problem problem = tiny_problem(10.0);
  RestartOptions options;
  options.timeout_seconds = 1.0;
  options.restart_cap = 3;

  SUBCASE("instant success") {
    int calls = 0;
    Searcher hit = [&](const Budget&, std::uint64_t, std::optional<double> target) {
      ++calls;
      SearchResult r;
      r.best.score = *target;
      r.elapsed_seconds = 0.5;
      return r;
    };
    RunRecord rec = run_until_target(problem, AlgoConfig{}, options, 7, hit);
    CHECK(rec.restarts == 0);
    CHECK(rec.success);
    CHECK(calls == 1);
    CHECK(rec.total_wall_time == 0.5);
  }
  SUBCASE("never reaches the target") {
    std::vector<std::uint64_t> seeds;
    Searcher miss = [&](const Budget& budget, std::uint64_t seed, std::optional<double>) {
      seeds.push_back(seed);
      CHECK(budget.wall_seconds == 1.0);
      SearchResult r;
      r.best.score = 3.0;
      r.elapsed_seconds = 1.0;
      return r;
    };
    RunRecord rec = run_until_target(problem, AlgoConfig{}, options, 7, miss);
    CHECK(rec.restarts == 3);
    CHECK_FALSE(rec.success);
    CHECK(rec.best_score == 3.0);
    CHECK(rec.total_wall_time == 4.0);
    REQUIRE(seeds.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(seeds[k] == restart_seed(7, k));
    std::sort(seeds.begin(), seeds.end());
    CHECK(std::unique(seeds.begin(), seeds.end()) == seeds.end());
  }
}

TEST_CASE("restart protocol with a real search") {
  const Problem problem = tiny_problem(6.0);
  AlgoConfig config;
  config.algorithm = Algorithm::Nmcs;
  config.level = 2;
  RestartOptions options;
  options.timeout_seconds = 30.0;
  RunRecord rec = run_until_target(problem, config, options, 1);
  CHECK(rec.success);
  CHECK(rec.best_score >= 6.0);
  CHECK(score(replay(problem.sequence, Dimension::Three, rec.best_moves, true)) == rec.best_score);
}

TEST_CASE("aggregate") {
  SUBCASE("four successful runs") {
    std::vector<RunRecord> rs{timed(1, true), timed(2, true), timed(3, true), timed(4, true)};
    AggregateStats s = aggregate(rs);
    CHECK(*s.mean_time == doctest::Approx(2.5));
    CHECK(*s.interquartile_range == doctest::Approx(1.5));
    CHECK(s.success_count == 4);
    CHECK(s.run_count == 4);
  }
  SUBCASE("mean 5.5, interquartile 5") {
    std::vector<RunRecord> rs{timed(3, true), timed(3, true), timed(8, true), timed(8, true)};
    AggregateStats s = aggregate(rs);
    CHECK(*s.mean_time == doctest::Approx(5.5));
    CHECK(*s.interquartile_range == doctest::Approx(5.0));
  }
  SUBCASE("single record") {
    std::vector<RunRecord> rs{timed(2.5, true, 31)};
    AggregateStats s = aggregate(rs);
    CHECK(*s.interquartile_range == 0.0);
    CHECK(s.score_histogram.size() == 1);
    CHECK(s.score_histogram.at(31) == 1);
  }
  SUBCASE("failures only count toward the all-runs mean") {
    std::vector<RunRecord> rs{timed(1, true, 32), timed(9, false, 30)};
    AggregateStats s = aggregate(rs);
    CHECK(*s.mean_time == doctest::Approx(1.0));
    CHECK(*s.mean_time_all == doctest::Approx(5.0));
    CHECK(s.score_histogram.at(30) == 1);

    std::vector<RunRecord> none{timed(1, false)};
    CHECK_FALSE(aggregate(none).mean_time);
  }
  SUBCASE("empty") {
    CHECK_THROWS_AS(aggregate(std::vector<RunRecord>{}), ContractViolation);
  }
}

TEST_CASE("quantile interpolates between order statistics") {
  CHECK(quantile({4, 1, 3, 2}, 0.25) == doctest::Approx(1.75));
  CHECK(quantile({4, 1, 3, 2}, 0.5) == doctest::Approx(2.5));
  CHECK(quantile({7}, 0.9) == 7.0);
  CHECK_THROWS_AS(quantile({}, 0.5), ContractViolation);
}

TEST_CASE("fixed budget runs") {
  const Problem problem = tiny_problem(100.0);
  AlgoConfig config;
  config.algorithm = Algorithm::Lnmcs;
  config.level = 2;
  config.eval_playouts = 4;
  const Budget budget{std::nullopt, 3000};
  BatchResult serial = fixed_budget_runs(problem, config, budget, 4, 99);
  BatchResult parallel = fixed_budget_runs_parallel(problem, config, budget, 4, 99, 3);
  REQUIRE(serial.records.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(serial.records[k].seed == run_seed(99, k));
    CHECK(serial.records[k].best_score == parallel.records[k].best_score);
    CHECK(serial.records[k].best_moves == parallel.records[k].best_moves);
    CHECK_FALSE(serial.records[k].success);
  }
  CHECK(serial.stats.score_histogram == parallel.stats.score_histogram);
  CHECK(serial.stats.success_count == 0);

  BatchResult one = fixed_budget_runs(problem, config, budget, 1, 5);
  CHECK(one.stats.score_histogram.size() == 1);
}

TEST_CASE("reports") {
  Report report;
  report.molecule_id = 1;
  report.config = benchmark_config(1);
  std::vector<RunRecord> rs{timed(1, true, 32), timed(2, true, 32), timed(5, false, 31)};
  report.batch.records = rs;
  report.batch.stats = aggregate(rs);

  SUBCASE("stats survive a JSON round trip") {
    CHECK(stats_from_json(to_json(report.batch.stats)) == report.batch.stats);
    const nlohmann::json j = nlohmann::json::parse(to_json(report).dump());
    CHECK(j.at("records").size() == 3);
    CHECK(j.at("params").at("threshold") == "max");
  }
  SUBCASE("empty histogram is header only") {
    CHECK(histogram_csv(AggregateStats{}) == "score,count\n");
  }
  SUBCASE("summary and histogram CSV") {
    const std::string summary = summary_csv(std::span<const Report>(&report, 1));
    CHECK(summary == "molecule,algo,runs,successes,mean_time_min,iqr_min\n1,lnmcs,3,2,1.5,0.5\n");
    CHECK(histogram_csv(report.batch.stats) == "score,count\n31,1\n32,2\n");
  }
  SUBCASE("files") {
    const std::string path = "bench_test_report.csv";
    emit_report(std::span<const Report>(&report, 1), ReportFormat::Csv, path);
    CHECK(slurp(path).rfind("molecule,algo", 0) == 0);
    CHECK(slurp("bench_test_report_hist.csv") == "score,count\n31,1\n32,2\n");
    std::remove(path.c_str());
    std::remove("bench_test_report_hist.csv");
    CHECK_THROWS_AS(emit_report(std::span<const Report>(&report, 1), ReportFormat::Json,
                                "/nonexistent-dir/out.json"),
                    std::runtime_error);
  }
}
