#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hpfold/lattice.hpp"

namespace hpfold {

inline constexpr double kNoScore = -std::numeric_limits<double>::infinity();

/// Stop conditions for a search. Empty members mean "no limit".
struct Budget {
  std::optional<double> wall_seconds;
  std::optional<std::uint64_t> max_playouts;

  bool limited() const noexcept { return wall_seconds.has_value() || max_playouts.has_value(); }
};

/// One recursive call made by a nested search: the parent's depth
/// (moves already played), the move leading to the child, and the level
/// the child was searched at.
struct RecursionEvent {
  std::size_t depth = 0;
  Move move = Move::PosX;
  int level = 0;

  friend bool operator==(const RecursionEvent&, const RecursionEvent&) = default;
};

/// One LNMCS pruning decision: the child's estimate, the cut it was
/// compared against (ratio x threshold) and the level it was searched at.
struct PruneDecision {
  std::size_t depth = 0;
  std::size_t sibling = 0;   // index among the parent's legal moves
  std::size_t siblings = 0;  // number of legal moves at the parent
  Move move = Move::PosX;
  double estimate = 0.0;
  double cut = 0.0;
  int parent_level = 0;
  int level = 0;
};

/// Bookkeeping shared by every call of one search run: budget and target
/// checks, playout accounting, the best complete folding seen so far
/// (moves relative to the root state) and an optional recursion trace.
class SearchContext {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SearchContext(const ChainState& root, Budget budget = {},
                         std::optional<double> target = std::nullopt);

  /// Polled between child evaluations. Once true, stays true.
  bool should_stop();
  bool stopped() const noexcept { return stopped_; }

  /// Counts one playout launched from `origin`; `result.moves` are the moves
  /// after `origin`. With `track_best` the folding competes for best().
  void record_playout(const ChainState& origin, const ScoredSequence& result,
                      bool track_best = true);
  void count_playouts(std::uint64_t n) noexcept { playouts_ += n; }

  /// Offers a complete folding reached from `origin` by `suffix`.
  void offer(const ChainState& origin, double score, std::span<const Move> suffix);

  const std::optional<ScoredSequence>& best() const noexcept { return best_; }
  double time_to_best() const noexcept { return time_to_best_; }
  std::uint64_t playouts() const noexcept { return playouts_; }
  double elapsed_seconds() const;
  std::size_t root_depth() const noexcept { return root_depth_; }
  const Budget& budget() const noexcept { return budget_; }

  void set_trace(std::vector<RecursionEvent>* trace) noexcept { trace_ = trace; }
  void trace(std::size_t depth, Move move, int level) {
    if (trace_) trace_->push_back({depth, move, level});
  }
  void set_decision_log(std::vector<PruneDecision>* log) noexcept { decisions_ = log; }
  void log_decision(const PruneDecision& d) {
    if (decisions_) decisions_->push_back(d);
  }

 private:
  Clock::time_point start_;
  Budget budget_;
  std::optional<double> target_;
  std::size_t root_depth_;
  std::uint64_t playouts_ = 0;
  bool stopped_ = false;
  std::optional<ScoredSequence> best_;
  double time_to_best_ = 0.0;
  std::vector<RecursionEvent>* trace_ = nullptr;
  std::vector<PruneDecision>* decisions_ = nullptr;
};

struct SearchResult {
  ScoredSequence best;  // moves from the root state
  std::uint64_t playouts = 0;
  double elapsed_seconds = 0.0;
  double time_to_best_seconds = 0.0;
  bool interrupted = false;  // budget or target stopped the search early
  int iterations = 1;        // complete searches launched within the budget
};

}  // namespace hpfold
