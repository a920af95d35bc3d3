#include "hpfold/algorithm.hpp"

#include <array>
#include <stdexcept>

namespace hpfold {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kAlgorithmNames = {{
    {Algorithm::Playout, "playout"},
    {Algorithm::Nmcs, "nmcs"},
    {Algorithm::Lnmcs, "lnmcs"},
    {Algorithm::Nrpa, "nrpa"},
    {Algorithm::Gnrpa, "gnrpa"},
    {Algorithm::GreedyBfs, "gbfs"},
    {Algorithm::Uct, "uct"},
}};

ScoredSequence run_once(const ChainState& root, const AlgoConfig& config, RngStream& rng,
                        SearchContext& ctx) {
  switch (config.algorithm) {
    case Algorithm::Playout: {
      ScoredSequence r = playout(root, config.playout, rng);
      ctx.record_playout(root, r);
      return r;
    }
    case Algorithm::Nmcs:
      return nmcs(root, config.nmcs_params(), rng, ctx);
    case Algorithm::Lnmcs: {
      ThresholdTable table(config.threshold);
      return lnmcs(root, config.lnmcs_params(), table, rng, ctx);
    }
    case Algorithm::Nrpa:
      return nrpa(root, config.nrpa_params(), rng, ctx);
    case Algorithm::Gnrpa:
      return gnrpa(root, config.nrpa_params(), config.playout.bias, rng, ctx);
    case Algorithm::GreedyBfs:
      return greedy_bfs(root, config.greedy_params(), rng, ctx);
    case Algorithm::Uct: {
      UctParams params = config.uct_params();
      if (ctx.budget().limited()) params.max_iterations.reset();
      return uct(root, params, rng, ctx);
    }
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace

std::string_view algorithm_name(Algorithm a) noexcept {
  for (const auto& [algo, name] : kAlgorithmNames)
    if (algo == a) return name;
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [algo, n] : kAlgorithmNames)
    if (n == name) return algo;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view threshold_name(ThresholdPolicy p) noexcept {
  switch (p) {
    case ThresholdPolicy::Max: return "max";
    case ThresholdPolicy::Mean: return "mean";
    case ThresholdPolicy::Median: return "median";
  }
  return "?";
}

ThresholdPolicy parse_threshold(std::string_view name) {
  if (name == "max") return ThresholdPolicy::Max;
  if (name == "mean") return ThresholdPolicy::Mean;
  if (name == "median") return ThresholdPolicy::Median;
  throw std::invalid_argument("unknown threshold policy: " + std::string(name));
}

LnmcsParams AlgoConfig::lnmcs_params() const {
  LnmcsParams p;
  p.level = level;
  p.eval_playouts = eval_playouts;
  p.ratio = ratio;
  p.playout = playout;
  p.threshold_policy = threshold;
  p.retain_eval_best = !faithful_eval;
  p.two_pass = two_pass;
  return p;
}

NrpaParams AlgoConfig::nrpa_params() const {
  NrpaParams p;
  p.level = level;
  p.iterations = iterations;
  p.alpha = alpha;
  p.bias = algorithm == Algorithm::Gnrpa ? playout.bias : 0.0;
  p.reward = playout.reward;
  p.coding = coding;
  p.last_k = last_k;
  return p;
}

GreedyBfsParams AlgoConfig::greedy_params() const {
  GreedyBfsParams p;
  p.evals_per_node = evals_per_node;
  p.playout = playout;
  p.frontier_cap = frontier_cap;
  return p;
}

UctParams AlgoConfig::uct_params() const {
  UctParams p;
  p.exploration = exploration;
  p.playout = playout;
  p.max_iterations = uct_iterations;
  return p;
}

SearchResult run_search(std::shared_ptr<const HpSequence> seq, const AlgoConfig& config,
                        const Budget& budget, std::uint64_t seed, std::optional<double> target,
                        std::vector<RecursionEvent>* trace) {
  const ChainState root(seq, config.dim, config.symmetry_reduction);
  SearchContext ctx(root, budget, target);
  ctx.set_trace(trace);
  const RngStream master(seed);

  SearchResult out;
  out.iterations = 0;
  ScoredSequence last;
  do {
    RngStream rng = master.split(static_cast<std::uint64_t>(out.iterations));
    last = run_once(root, config, rng, ctx);
    ++out.iterations;
  } while (config.algorithm != Algorithm::Playout && budget.limited() && !ctx.should_stop());

  if (budget.limited() || last.score == kNoScore) {
    if (!ctx.best()) throw std::logic_error("search finished without any complete folding");
    out.best = *ctx.best();
  } else {
    out.best = std::move(last);
  }
  out.playouts = ctx.playouts();
  out.elapsed_seconds = ctx.elapsed_seconds();
  out.time_to_best_seconds = ctx.time_to_best();
  out.interrupted = ctx.stopped();

  const ChainState check = replay(seq, config.dim, out.best.moves, config.symmetry_reduction);
  if (!check.is_terminal() || score(check) != out.best.score)
    throw std::logic_error("search result does not replay to its reported score");
  return out;
}

}  // namespace hpfold
