#include "hpfold/bench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hpfold/parallel.hpp"

namespace hpfold {

namespace {

constexpr std::array<BenchmarkMolecule, 10> kMolecules = {{
    {1, "HPHHPPHHHHPHHHPPHHPPHPHHHPHPHHPPHHPPPHPPPPPPPPHH", 32},
    {2, "HHHHPHHPHHHHHPPHPPHHPPHPPPPPPHPPHPPPHPPHHPPHHHPH", 34},
    {3, "PHPHHPHHHHHHPPHPHPPHPHHPHPHPPPHPPHHPPHHPPHPHPPHP", 34},
    {4, "PHPHHPPHPHHHPPHHPHHPPPHHHHHPPHPHHPHPHPPPPHPPHPHP", 33},
    {5, "PPHPPPHPHHHHPPHHHHPHHPHHHPPHPHPHPPHPPPPPPHHPHHPH", 32},
    {6, "HHHPPPHHPHPHHPHHPHHPHPPPPPPPHPHPPHPPPHPPHHHHHHPH", 32},
    {7, "PHPPPPHPHHHPHPHHHHPHHPHHPPPHPHPPPHHHPPHHPPHHPPPH", 32},
    {8, "PHHPHHHPHHHHPPHHHPPPPPPHPHHPPHHPHPPPHHPHPHPHHPPP", 31},
    {9, "PHPHPPPPHPHPHPPHPHHHHHHPPHHHPHPPHPHHPPHPHHHPPPPH", 34},
    {10, "PHHPPPPPPHHPPPHHHPHPPHPHHPPHPPHPPHHPPHHHHHHHPPHH", 33},
}};

double minutes(double seconds) { return seconds / 60.0; }

RunRecord blank_record(const Problem& problem, const AlgoConfig& config, std::uint64_t seed) {
  RunRecord r;
  r.molecule_id = problem.molecule_id;
  r.sequence = problem.sequence->to_string();
  r.config = config;
  r.seed = seed;
  r.best_score = kNoScore;
  return r;
}

void absorb(RunRecord& record, const SearchResult& result) {
  record.total_wall_time += result.elapsed_seconds;
  record.playout_count += result.playouts;
  if (result.best.score > record.best_score) {
    record.best_score = result.best.score;
    record.best_moves = result.best.moves;
  }
}

RunRecord single_run(const Problem& problem, const AlgoConfig& config, const Budget& budget,
                     std::uint64_t seed) {
  RunRecord record = blank_record(problem, config, seed);
  absorb(record, run_search(problem.sequence, config, budget, seed, problem.target));
  record.success = problem.target && record.best_score >= *problem.target;
  return record;
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> optional_double(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string format_optional(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream out;
  out << *v;
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report destination: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing report: " + path);
}

}  // namespace

std::span<const BenchmarkMolecule> benchmark_molecules() noexcept { return kMolecules; }

const BenchmarkMolecule& benchmark_molecule(int id) {
  if (id < 1 || id > static_cast<int>(kMolecules.size()))
    throw std::out_of_range("benchmark molecule id must be in 1..10, got " + std::to_string(id));
  return kMolecules[static_cast<std::size_t>(id - 1)];
}

AlgoConfig benchmark_config(int molecule_id) {
  AlgoConfig c;
  c.algorithm = Algorithm::Lnmcs;
  c.dim = Dimension::Three;
  c.playout.bias = 20.0;
  if (molecule_id == 4) {
    c.level = 4;
    c.eval_playouts = 10;
    c.ratio = 0.97;
    c.threshold = ThresholdPolicy::Mean;
  } else {
    c.level = 5;
    c.eval_playouts = 20;
    c.ratio = 0.9;
    c.threshold = ThresholdPolicy::Max;
  }
  return c;
}

Problem Problem::from_molecule(const BenchmarkMolecule& m) {
  return Problem{m.id, std::make_shared<const HpSequence>(parse_sequence(m.sequence)),
                 static_cast<double>(m.target_score)};
}

Searcher make_searcher(std::shared_ptr<const HpSequence> seq, const AlgoConfig& config) {
  return [seq = std::move(seq), config](const Budget& budget, std::uint64_t seed,
                                        std::optional<double> target) {
    return run_search(seq, config, budget, seed, target);
  };
}

std::uint64_t restart_seed(std::uint64_t run_seed, int k) {
  return RngStream(run_seed).split(0x5245535441525400ull + static_cast<std::uint64_t>(k)).seed();
}

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t k) {
  return RngStream(master_seed).split(k).seed();
}

RunRecord run_until_target(const Problem& problem, const AlgoConfig& config,
                           const RestartOptions& options, std::uint64_t seed,
                           const Searcher& searcher) {
  if (!(options.timeout_seconds > 0.0)) throw ContractViolation("timeout must be positive");
  if (!problem.target) throw ContractViolation("run_until_target needs a target score");
  const Searcher search = searcher ? searcher : make_searcher(problem.sequence, config);
  const Budget budget{options.timeout_seconds, options.max_playouts};

  RunRecord record = blank_record(problem, config, seed);
  for (int k = 0;; ++k) {
    absorb(record, search(budget, restart_seed(seed, k), problem.target));
    record.restarts = k;
    if (record.best_score >= *problem.target) {
      record.success = true;
      break;
    }
    if (k >= options.restart_cap) break;
  }
  return record;
}

BatchResult fixed_budget_runs(const Problem& problem, const AlgoConfig& config,
                              const Budget& budget, std::size_t n_runs, std::uint64_t master_seed) {
  if (n_runs < 1) throw ContractViolation("n_runs must be >= 1");
  BatchResult out;
  for (std::size_t k = 0; k < n_runs; ++k)
    out.records.push_back(single_run(problem, config, budget, run_seed(master_seed, k)));
  out.stats = aggregate(out.records);
  return out;
}

BatchResult fixed_budget_runs_parallel(const Problem& problem, const AlgoConfig& config,
                                       const Budget& budget, std::size_t n_runs,
                                       std::uint64_t master_seed, int threads) {
  if (n_runs < 1) throw ContractViolation("n_runs must be >= 1");
  BatchResult out;
  out.records.resize(n_runs);
  const auto count = static_cast<std::int64_t>(n_runs);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out.records[idx] = single_run(problem, config, budget, run_seed(master_seed, idx));
  }
  out.stats = aggregate(out.records);
  return out;
}

BatchResult restart_runs(const Problem& problem, const AlgoConfig& config,
                         const RestartOptions& options, std::size_t n_runs,
                         std::uint64_t master_seed, int threads) {
  if (n_runs < 1) throw ContractViolation("n_runs must be >= 1");
  BatchResult out;
  out.records.resize(n_runs);
  const auto count = static_cast<std::int64_t>(n_runs);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out.records[idx] = run_until_target(problem, config, options, run_seed(master_seed, idx));
  }
  out.stats = aggregate(out.records);
  return out;
}

double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw ContractViolation("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double h = static_cast<double>(values.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

AggregateStats aggregate(std::span<const RunRecord> records) {
  if (records.empty()) throw ContractViolation("aggregate over no records");
  AggregateStats stats;
  stats.run_count = records.size();
  std::vector<double> successful;
  double all = 0.0;
  for (const RunRecord& r : records) {
    all += minutes(r.total_wall_time);
    if (r.success) successful.push_back(minutes(r.total_wall_time));
    ++stats.score_histogram[static_cast<int>(std::lround(r.best_score))];
  }
  stats.success_count = successful.size();
  stats.mean_time_all = all / static_cast<double>(records.size());
  if (!successful.empty()) {
    double sum = 0.0;
    for (double t : successful) sum += t;
    stats.mean_time = sum / static_cast<double>(successful.size());
    stats.interquartile_range = quantile(successful, 0.75) - quantile(successful, 0.25);
  }
  return stats;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

nlohmann::json to_json(const AlgoConfig& c) {
  nlohmann::json j = {
      {"algo", algorithm_name(c.algorithm)},
      {"dim", static_cast<int>(c.dim)},
      {"symmetry_reduction", c.symmetry_reduction},
      {"bias", c.playout.bias},
      {"reward", {{"hh_gain", c.playout.reward.hh_gain},
                  {"hp_penalty", c.playout.reward.hp_penalty},
                  {"pp_gain", c.playout.reward.pp_gain}}},
  };
  switch (c.algorithm) {
    case Algorithm::Playout:
      break;
    case Algorithm::Nmcs:
      j["level"] = c.level;
      break;
    case Algorithm::Lnmcs:
      j["level"] = c.level;
      j["eval_playouts"] = c.eval_playouts;
      j["ratio"] = c.ratio;
      j["threshold"] = threshold_name(c.threshold);
      j["faithful_eval"] = c.faithful_eval;
      j["two_pass"] = c.two_pass;
      break;
    case Algorithm::Nrpa:
    case Algorithm::Gnrpa:
      j["level"] = c.level;
      j["iterations"] = c.iterations;
      j["alpha"] = c.alpha;
      j["code"] = c.coding == MoveCoding::Ply ? "ply" : "last-k";
      if (c.coding == MoveCoding::LastK) j["last_k"] = c.last_k;
      break;
    case Algorithm::GreedyBfs:
      j["evals_per_node"] = c.evals_per_node;
      j["frontier_cap"] = c.frontier_cap;
      break;
    case Algorithm::Uct:
      j["exploration"] = c.exploration;
      j["uct_iterations"] = c.uct_iterations;
      break;
  }
  return j;
}

nlohmann::json to_json(const AggregateStats& s) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [score, count] : s.score_histogram) hist.push_back({score, count});
  return {
      {"runs", s.run_count},
      {"successes", s.success_count},
      {"mean_time_min", optional_json(s.mean_time)},
      {"iqr_min", optional_json(s.interquartile_range)},
      {"mean_time_all_min", optional_json(s.mean_time_all)},
      {"histogram", hist},
  };
}

AggregateStats stats_from_json(const nlohmann::json& j) {
  AggregateStats s;
  s.run_count = j.at("runs").get<std::size_t>();
  s.success_count = j.at("successes").get<std::size_t>();
  s.mean_time = optional_double(j.at("mean_time_min"));
  s.interquartile_range = optional_double(j.at("iqr_min"));
  s.mean_time_all = optional_double(j.at("mean_time_all_min"));
  for (const auto& row : j.at("histogram"))
    s.score_histogram[row.at(0).get<int>()] = row.at(1).get<std::size_t>();
  return s;
}

nlohmann::json to_json(const RunRecord& r) {
  return {
      {"seed", r.seed},
      {"restarts", r.restarts},
      {"wall_time_s", r.total_wall_time},
      {"best_score", r.best_score},
      {"best_moves", moves_to_string(r.best_moves)},
      {"playouts", r.playout_count},
      {"success", r.success},
  };
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const RunRecord& r : report.batch.records) records.push_back(to_json(r));
  return {
      {"molecule", report.molecule_id},
      {"sequence", report.sequence},
      {"params", to_json(report.config)},
      {"master_seed", report.master_seed},
      {"timeout_secs", optional_json(report.timeout_seconds)},
      {"max_playouts", optional_json(report.max_playouts)},
      {"stats", to_json(report.batch.stats)},
      {"records", records},
  };
}

std::string summary_csv(std::span<const Report> reports) {
  std::ostringstream out;
  out << "molecule,algo,runs,successes,mean_time_min,iqr_min\n";
  for (const Report& r : reports) {
    const AggregateStats& s = r.batch.stats;
    out << (r.molecule_id > 0 ? std::to_string(r.molecule_id) : r.sequence) << ','
        << algorithm_name(r.config.algorithm) << ',' << s.run_count << ',' << s.success_count << ','
        << format_optional(s.mean_time) << ',' << format_optional(s.interquartile_range) << '\n';
  }
  return out.str();
}

std::string histogram_csv(const AggregateStats& stats) {
  std::ostringstream out;
  out << "score,count\n";
  for (const auto& [score, count] : stats.score_histogram) out << score << ',' << count << '\n';
  return out.str();
}

std::string histogram_path(const std::string& path, std::size_t index, std::size_t count) {
  std::string stem = path;
  if (stem.size() >= 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) stem.resize(stem.size() - 4);
  if (count > 1) stem += "_" + std::to_string(index + 1);
  return stem + "_hist.csv";
}

void emit_report(std::span<const Report> reports, ReportFormat format, const std::string& path) {
  if (format == ReportFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const Report& r : reports) j.push_back(to_json(r));
    write_file(path, j.dump(2) + "\n");
    return;
  }
  write_file(path, summary_csv(reports));
  for (std::size_t i = 0; i < reports.size(); ++i)
    write_file(histogram_path(path, i, reports.size()), histogram_csv(reports[i].batch.stats));
}

}  // namespace hpfold
