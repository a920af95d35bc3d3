// hpfold: HP-model lattice protein folding by nested Monte Carlo search.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpfold/bench.hpp"
#include "hpfold/enumerate.hpp"

namespace {

using namespace hpfold;

struct Options {
  std::string seq;
  int dim = 3;
  std::string algo = "lnmcs";
  int level = 5;
  double bias = 20.0;
  double hp_penalty = -0.2;
  int eval_playouts = 20;
  double ratio = 0.9;
  std::string threshold = "max";
  std::string faithful_eval = "off";
  std::string two_pass = "off";
  std::string symmetry = "on";
  int iterations = 100;
  double alpha = 1.0;
  std::string code = "ply";
  int last_k = 3;
  int evals_per_node = 1;
  std::size_t frontier_cap = 1'000'000;
  double exploration = 0.4;
  std::uint64_t uct_iterations = 10'000;
  double timeout_secs = 0.0;
  std::uint64_t max_playouts = 0;
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::string dump_best;
  double target = 0.0;
  int restart_cap = 100;
  int threads = 1;
  std::string molecule = "1";
};

bool on_off(const std::string& v) { return v == "on"; }

AlgoConfig make_config(const Options& o) {
  AlgoConfig c;
  c.algorithm = parse_algorithm(o.algo);
  c.dim = o.dim == 2 ? Dimension::Two : Dimension::Three;
  c.symmetry_reduction = on_off(o.symmetry);
  c.playout.bias = o.bias;
  c.playout.reward.hp_penalty = o.hp_penalty;
  c.level = o.level;
  c.eval_playouts = o.eval_playouts;
  c.ratio = o.ratio;
  c.threshold = parse_threshold(o.threshold);
  c.faithful_eval = on_off(o.faithful_eval);
  c.two_pass = on_off(o.two_pass);
  c.iterations = o.iterations;
  c.alpha = o.alpha;
  c.coding = o.code == "last-k" ? MoveCoding::LastK : MoveCoding::Ply;
  c.last_k = o.last_k;
  c.evals_per_node = o.evals_per_node;
  c.frontier_cap = o.frontier_cap;
  c.exploration = o.exploration;
  c.uct_iterations = o.uct_iterations;
  return c;
}

Budget make_budget(const Options& o) {
  Budget b;
  if (o.timeout_secs > 0) b.wall_seconds = o.timeout_secs;
  if (o.max_playouts > 0) b.max_playouts = o.max_playouts;
  return b;
}

std::vector<HpSequence> load_sequences(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_sequence_file(arg.substr(1));
  return {parse_sequence(arg)};
}

void print_record(std::size_t index, const RunRecord& r) {
  std::cout << "run " << index << " seed " << r.seed << " score " << r.best_score << " moves "
            << moves_to_string(r.best_moves) << " playouts " << r.playout_count << " restarts "
            << r.restarts << " success " << (r.success ? 1 : 0) << '\n';
  std::cout << "# run " << index << " wall_time_s " << std::fixed << std::setprecision(3)
            << r.total_wall_time << std::defaultfloat << '\n';
}

void print_stats(const Report& rep) {
  const AggregateStats& s = rep.batch.stats;
  std::cout << "summary molecule " << rep.molecule_id << " algo "
            << algorithm_name(rep.config.algorithm) << " runs " << s.run_count << " successes "
            << s.success_count << " histogram";
  for (const auto& [score, count] : s.score_histogram) std::cout << ' ' << score << ':' << count;
  std::cout << '\n';
  if (s.mean_time)
    std::cout << "# mean_time_min " << *s.mean_time << " iqr_min " << *s.interquartile_range
              << '\n';
}

void dump_best(const std::string& path, const std::vector<Report>& reports,
               const AlgoConfig& config) {
  const RunRecord* best = nullptr;
  for (const Report& rep : reports)
    for (const RunRecord& r : rep.batch.records)
      if (!best || r.best_score > best->best_score) best = &r;
  if (!best) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open dump destination: " + path);
  const ChainState s = replay(std::make_shared<const HpSequence>(parse_sequence(best->sequence)),
                              config.dim, best->best_moves, config.symmetry_reduction);
  write_conformation(out, s);
}

void finish(const Options& o, const std::vector<Report>& reports, const AlgoConfig& config) {
  for (const Report& rep : reports) print_stats(rep);
  if (!o.out.empty()) emit_report(reports, parse_report_format(o.format), o.out);
  if (!o.dump_best.empty()) dump_best(o.dump_best, reports, config);
}

int cmd_run(const Options& o, bool target_set) {
  const AlgoConfig config = make_config(o);
  const Budget budget = make_budget(o);
  std::vector<Report> reports;
  for (const HpSequence& seq : load_sequences(o.seq)) {
    Problem problem{0, std::make_shared<const HpSequence>(seq), std::nullopt};
    if (target_set) problem.target = o.target;
    Report rep;
    rep.sequence = seq.to_string();
    rep.config = config;
    rep.master_seed = o.seed;
    rep.timeout_seconds = budget.wall_seconds;
    rep.max_playouts = budget.max_playouts;
    rep.batch = o.threads > 1
                    ? fixed_budget_runs_parallel(problem, config, budget, o.runs, o.seed, o.threads)
                    : fixed_budget_runs(problem, config, budget, o.runs, o.seed);
    for (std::size_t k = 0; k < rep.batch.records.size(); ++k) print_record(k, rep.batch.records[k]);
    reports.push_back(std::move(rep));
  }
  finish(o, reports, config);
  return 0;
}

int cmd_bench(const Options& o, const CLI::App& sub) {
  std::vector<int> ids;
  if (o.molecule == "all") {
    for (const auto& m : benchmark_molecules()) ids.push_back(m.id);
  } else {
    ids.push_back(std::stoi(o.molecule));
    benchmark_molecule(ids.back());
  }

  std::vector<Report> reports;
  AlgoConfig last_config;
  for (int id : ids) {
    const BenchmarkMolecule& m = benchmark_molecule(id);
    AlgoConfig config = make_config(o);
    config.dim = Dimension::Three;
    // Per-molecule LNMCS settings unless overridden on the command line.
    if (config.algorithm == Algorithm::Lnmcs) {
      const AlgoConfig tuned = benchmark_config(id);
      if (sub.count("--level") == 0) config.level = tuned.level;
      if (sub.count("--eval-playouts") == 0) config.eval_playouts = tuned.eval_playouts;
      if (sub.count("--ratio") == 0) config.ratio = tuned.ratio;
      if (sub.count("--threshold") == 0) config.threshold = tuned.threshold;
    }
    RestartOptions restart;
    restart.timeout_seconds = o.timeout_secs > 0 ? o.timeout_secs : 150.0;
    if (o.max_playouts > 0) restart.max_playouts = o.max_playouts;
    restart.restart_cap = o.restart_cap;

    Report rep;
    rep.molecule_id = id;
    rep.sequence = std::string(m.sequence);
    rep.config = config;
    rep.master_seed = o.seed;
    rep.timeout_seconds = restart.timeout_seconds;
    rep.max_playouts = restart.max_playouts;
    rep.batch = restart_runs(Problem::from_molecule(m), config, restart, o.runs, o.seed, o.threads);
    for (std::size_t k = 0; k < rep.batch.records.size(); ++k) print_record(k, rep.batch.records[k]);
    reports.push_back(std::move(rep));
    last_config = config;
  }
  finish(o, reports, last_config);
  return 0;
}

int cmd_enumerate(const Options& o) {
  const Dimension dim = o.dim == 2 ? Dimension::Two : Dimension::Three;
  const bool symmetry = on_off(o.symmetry);
  for (const HpSequence& seq : load_sequences(o.seq)) {
    const EnumerationResult r = enumerate(seq, dim, symmetry);
    std::cout << "sequence " << seq.to_string() << " dim " << o.dim << " optimum " << r.optimum
              << " complete_optimum " << r.complete_optimum << " complete " << r.complete_count
              << " trapped " << r.trapped_count << " optimal " << r.optimal_count << " witness "
              << moves_to_string(r.witness) << '\n';
    if (!o.dump_best.empty()) {
      std::ofstream out(o.dump_best);
      if (!out) throw std::runtime_error("cannot open dump destination: " + o.dump_best);
      write_conformation(out, replay(std::make_shared<const HpSequence>(seq), dim, r.witness,
                                     symmetry));
    }
  }
  return 0;
}

void add_search_options(CLI::App& app, Options& o) {
  app.add_option("--dim", o.dim, "Lattice dimension")->check(CLI::IsMember({2, 3}));
  app.add_option("--algo", o.algo, "Search algorithm")
      ->check(CLI::IsMember({"playout", "nmcs", "lnmcs", "nrpa", "gnrpa", "gbfs", "uct"}));
  app.add_option("--level", o.level, "Nesting level (nmcs, lnmcs, nrpa, gnrpa)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--bias", o.bias, "Playout softmax bias b");
  app.add_option("--hp-penalty", o.hp_penalty, "Guidance gain per H-P adjacency");
  app.add_option("--eval-playouts", o.eval_playouts, "LNMCS playouts per child estimate")
      ->check(CLI::PositiveNumber);
  app.add_option("--ratio", o.ratio, "LNMCS pruning ratio");
  app.add_option("--threshold", o.threshold, "LNMCS threshold statistic")
      ->check(CLI::IsMember({"max", "mean", "median"}));
  app.add_option("--faithful-eval", o.faithful_eval,
                 "Discard evaluation playout sequences, keeping only their mean")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--two-pass", o.two_pass, "Evaluate all children before pruning")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--symmetry", o.symmetry, "Fix the lattice symmetries of the first moves")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--iterations", o.iterations, "NRPA iterations per level")
      ->check(CLI::PositiveNumber);
  app.add_option("--alpha", o.alpha, "NRPA adaptation step");
  app.add_option("--code", o.code, "NRPA move coding")->check(CLI::IsMember({"ply", "last-k"}));
  app.add_option("--last-k", o.last_k, "Moves of history in last-k coding")
      ->check(CLI::Range(0, 20));
  app.add_option("--evals-per-node", o.evals_per_node, "Greedy BFS playouts per child")
      ->check(CLI::PositiveNumber);
  app.add_option("--frontier-cap", o.frontier_cap, "Greedy BFS frontier capacity")
      ->check(CLI::PositiveNumber);
  app.add_option("--exploration", o.exploration, "UCT exploration constant")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--uct-iterations", o.uct_iterations, "UCT iterations when no budget is set")
      ->check(CLI::PositiveNumber);
  app.add_option("--timeout-secs", o.timeout_secs, "Wall-clock budget per search launch")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-playouts", o.max_playouts, "Playout budget per search launch");
  app.add_option("--runs", o.runs, "Independent runs")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--out", o.out, "Report destination");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--dump-best", o.dump_best, "Write the best conformation here");
  app.add_option("--threads", o.threads, "OpenMP threads for independent runs")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HP-model lattice protein folding with nested Monte Carlo search"};
  app.require_subcommand(1);
  Options o;

  CLI::App* run = app.add_subcommand("run", "Fold one sequence (or a file of sequences)");
  run->add_option("--seq", o.seq, "HP string, or @path to a sequence file")->required();
  add_search_options(*run, o);
  run->add_option("--target", o.target, "Stop a run once this score is reached");

  CLI::App* bench = app.add_subcommand("bench", "Benchmark molecules with the restart protocol");
  bench->add_option("--molecule", o.molecule, "Molecule id 1..10 or 'all'");
  add_search_options(*bench, o);
  bench->add_option("--restart-cap", o.restart_cap, "Maximum restarts per run")
      ->check(CLI::NonNegativeNumber);

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "Exact optimum by exhaustive enumeration (small chains)");
  enumerate_cmd->add_option("--seq", o.seq, "HP string, or @path to a sequence file")->required();
  enumerate_cmd->add_option("--dim", o.dim, "Lattice dimension")->check(CLI::IsMember({2, 3}));
  enumerate_cmd->add_option("--symmetry", o.symmetry, "Enumerate one folding per symmetry class")
      ->check(CLI::IsMember({"on", "off"}));
  enumerate_cmd->add_option("--dump-best", o.dump_best, "Write an optimal conformation here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(o, run->count("--target") > 0);
    if (bench->parsed()) return cmd_bench(o, *bench);
    return cmd_enumerate(o);
  } catch (const std::exception& e) {
    std::cerr << "hpfold: " << e.what() << '\n';
    return 2;
  }
}
