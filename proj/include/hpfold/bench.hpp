#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hpfold/algorithm.hpp"

namespace hpfold {

/// The ten 48-residue 3D benchmark chains with their best known -E.
struct BenchmarkMolecule {
  int id;
  std::string_view sequence;
  int target_score;
};

std::span<const BenchmarkMolecule> benchmark_molecules() noexcept;
/// Throws std::out_of_range for ids outside 1..10.
const BenchmarkMolecule& benchmark_molecule(int id);

/// Search settings used for a benchmark molecule's timed runs: level 4,
/// 10 evaluation playouts, ratio 0.97 and the Mean threshold for molecule
/// 4; level 5, 20 playouts, ratio 0.9 and the Max threshold otherwise.
AlgoConfig benchmark_config(int molecule_id);

/// What is being folded. `molecule_id` is 0 for ad-hoc sequences.
struct Problem {
  int molecule_id = 0;
  std::shared_ptr<const HpSequence> sequence;
  std::optional<double> target;

  static Problem from_molecule(const BenchmarkMolecule& m);
};

struct RunRecord {
  int molecule_id = 0;
  std::string sequence;
  AlgoConfig config;
  std::uint64_t seed = 0;
  int restarts = 0;
  double total_wall_time = 0.0;  // seconds, search calls only
  double best_score = 0.0;
  std::vector<Move> best_moves;
  std::uint64_t playout_count = 0;
  bool success = false;
};

/// Timing statistics in minutes, over successful records.
struct AggregateStats {
  std::optional<double> mean_time;
  std::optional<double> interquartile_range;
  std::optional<double> mean_time_all;  // every record, successful or not
  std::size_t success_count = 0;
  std::size_t run_count = 0;
  std::map<int, std::size_t> score_histogram;

  friend bool operator==(const AggregateStats&, const AggregateStats&) = default;
};

/// One search launch: (budget, seed, target) -> result.
using Searcher = std::function<SearchResult(const Budget&, std::uint64_t, std::optional<double>)>;

Searcher make_searcher(std::shared_ptr<const HpSequence> seq, const AlgoConfig& config);

/// Seed of restart `k` (0 = first launch) of a run seeded with `run_seed`.
std::uint64_t restart_seed(std::uint64_t run_seed, int k);
/// Seed of run `k` of a batch seeded with `master_seed`.
std::uint64_t run_seed(std::uint64_t master_seed, std::size_t k);

struct RestartOptions {
  double timeout_seconds = 150.0;
  std::optional<std::uint64_t> max_playouts;  // per launch
  int restart_cap = 100;
};

/// Launches the search with a per-launch budget until the target is
/// reached, relaunching on fresh seeds at most `restart_cap` times.
/// Wall time accumulates across launches.
RunRecord run_until_target(const Problem& problem, const AlgoConfig& config,
                           const RestartOptions& options, std::uint64_t seed,
                           const Searcher& searcher = {});

struct BatchResult {
  std::vector<RunRecord> records;
  AggregateStats stats;
};

/// `n_runs` independent single-budget runs, no restarts. Run k uses
/// run_seed(master_seed, k).
BatchResult fixed_budget_runs(const Problem& problem, const AlgoConfig& config,
                              const Budget& budget, std::size_t n_runs, std::uint64_t master_seed);

/// As fixed_budget_runs(), spreading runs over `threads` OpenMP threads.
/// Records come back in run order regardless of completion order.
BatchResult fixed_budget_runs_parallel(const Problem& problem, const AlgoConfig& config,
                                       const Budget& budget, std::size_t n_runs,
                                       std::uint64_t master_seed, int threads);

/// `n_runs` restart-protocol runs (run_until_target), in parallel when
/// `threads` > 1.
BatchResult restart_runs(const Problem& problem, const AlgoConfig& config,
                         const RestartOptions& options, std::size_t n_runs,
                         std::uint64_t master_seed, int threads = 1);

/// Q(p) by linear interpolation between order statistics (h = (n-1)p).
double quantile(std::vector<double> values, double p);

AggregateStats aggregate(std::span<const RunRecord> records);

enum class ReportFormat { Csv, Json };
ReportFormat parse_report_format(std::string_view name);

struct Report {
  int molecule_id = 0;
  std::string sequence;
  AlgoConfig config;
  std::uint64_t master_seed = 0;
  std::optional<double> timeout_seconds;
  std::optional<std::uint64_t> max_playouts;
  BatchResult batch;
};

nlohmann::json to_json(const AlgoConfig& config);
nlohmann::json to_json(const AggregateStats& stats);
nlohmann::json to_json(const RunRecord& record);
nlohmann::json to_json(const Report& report);
AggregateStats stats_from_json(const nlohmann::json& j);

/// Summary CSV: `molecule,algo,runs,successes,mean_time_min,iqr_min`.
std::string summary_csv(std::span<const Report> reports);
/// Histogram CSV: `score,count`.
std::string histogram_csv(const AggregateStats& stats);

/// Writes `reports` to `path`. CSV also writes one histogram file per
/// report next to it (see histogram_path()). Throws std::runtime_error when
/// a destination cannot be written.
void emit_report(std::span<const Report> reports, ReportFormat format, const std::string& path);
std::string histogram_path(const std::string& path, std::size_t index, std::size_t count);

}  // namespace hpfold
