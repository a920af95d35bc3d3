#pragma once

#include <deque>
#include <vector>

#include "hpfold/playout.hpp"
#include "hpfold/search.hpp"

namespace hpfold {

enum class ThresholdPolicy { Max, Mean, Median };

/// Per-depth pruning thresholds, grown lazily one depth at a time. A depth
/// that has not received an estimate reads as 0.0.
///
/// Max keeps the running maximum (starting from 0.0), Mean the running
/// arithmetic mean of all estimates, Median the median of the most recent
/// `median_window` estimates.
class ThresholdTable {
 public:
  explicit ThresholdTable(ThresholdPolicy policy = ThresholdPolicy::Max,
                          std::size_t median_window = 1001);

  ThresholdPolicy policy() const noexcept { return policy_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double threshold(std::size_t depth) const noexcept;
  std::size_t samples(std::size_t depth) const noexcept;

  /// Folds `estimate` into the entry for `depth`; returns the new threshold.
  double update(std::size_t depth, double estimate);
  void clear() noexcept { entries_.clear(); }

 private:
  struct Entry {
    double value = 0.0;
    std::size_t count = 0;
    std::deque<double> window;
  };

  ThresholdPolicy policy_;
  std::size_t median_window_;
  std::vector<Entry> entries_;
};

inline double update_threshold(ThresholdTable& table, std::size_t depth, double estimate) {
  return table.update(depth, estimate);
}

struct LnmcsParams {
  int level = 5;
  int eval_playouts = 20;
  double ratio = 0.9;
  PlayoutParams playout{};
  ThresholdPolicy threshold_policy = ThresholdPolicy::Max;
  /// Keep the best evaluation playout as a best-sequence candidate. Off
  /// uses evaluation playouts for their mean only.
  bool retain_eval_best = true;
  /// Evaluate every child before any prune decision. Off is the
  /// single-loop prototype: each child is judged against the table as it
  /// stands when the child is reached.
  bool two_pass = false;
};

struct ChildEvaluation {
  double estimate = 0.0;
  ScoredSequence best_seen;  // moves after the child state
};

/// Mean score of `params.eval_playouts` playouts from `child`, plus the
/// single best of those playouts (first one wins ties).
ChildEvaluation evaluate_child(const ChainState& child, const LnmcsParams& params,
                               RngStream& rng);

/// Lazy NMCS from `s`. `table` is shared by every recursion level of this
/// run. Evaluation playouts draw from `rng.split(kEvalStreamKey)`, so the
/// recursion consumes `rng` exactly as nmcs() would for the same calls.
ScoredSequence lnmcs(const ChainState& s, const LnmcsParams& params, ThresholdTable& table,
                     RngStream& rng, SearchContext& ctx);

ScoredSequence lnmcs(const ChainState& s, const LnmcsParams& params, ThresholdTable& table,
                     RngStream& rng);

inline constexpr std::uint64_t kEvalStreamKey = 0x45564C;

}  // namespace hpfold
