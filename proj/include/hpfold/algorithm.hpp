#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "hpfold/baselines.hpp"
#include "hpfold/lnmcs.hpp"
#include "hpfold/nmcs.hpp"

namespace hpfold {

enum class Algorithm { Playout, Nmcs, Lnmcs, Nrpa, Gnrpa, GreedyBfs, Uct };

std::string_view algorithm_name(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view name);
std::string_view threshold_name(ThresholdPolicy p) noexcept;
ThresholdPolicy parse_threshold(std::string_view name);

/// Everything needed to launch any of the searches on a sequence.
struct AlgoConfig {
  Algorithm algorithm = Algorithm::Lnmcs;
  Dimension dim = Dimension::Three;
  bool symmetry_reduction = true;
  PlayoutParams playout{};

  int level = 5;  // nmcs, lnmcs, nrpa, gnrpa

  int eval_playouts = 20;
  double ratio = 0.9;
  ThresholdPolicy threshold = ThresholdPolicy::Max;
  bool faithful_eval = false;
  bool two_pass = false;

  int iterations = 100;
  double alpha = 1.0;
  MoveCoding coding = MoveCoding::Ply;
  int last_k = 3;

  int evals_per_node = 1;
  std::size_t frontier_cap = 1'000'000;

  double exploration = 0.4;
  std::uint64_t uct_iterations = 10'000;  // used only when no budget is set

  NmcsParams nmcs_params() const { return {level, playout}; }
  LnmcsParams lnmcs_params() const;
  NrpaParams nrpa_params() const;
  GreedyBfsParams greedy_params() const;
  UctParams uct_params() const;
};

/// Runs `config.algorithm` from the initial state of `seq`.
///
/// Without a budget the algorithm runs once and its own result is returned.
/// With a budget, a search that finishes early is relaunched on a fresh
/// substream (fresh threshold table / policy / tree) until the budget or
/// `target` stops it, and the best folding over all launches is returned.
/// `playout` always runs exactly one playout.
///
/// The returned moves always replay to the returned score.
SearchResult run_search(std::shared_ptr<const HpSequence> seq, const AlgoConfig& config,
                        const Budget& budget, std::uint64_t seed,
                        std::optional<double> target = std::nullopt,
                        std::vector<RecursionEvent>* trace = nullptr);

}  // namespace hpfold
