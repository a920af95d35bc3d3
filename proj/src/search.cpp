#include "hpfold/search.hpp"

namespace hpfold {

SearchContext::SearchContext(const ChainState& root, Budget budget, std::optional<double> target)
    : start_(Clock::now()), budget_(budget), target_(target), root_depth_(root.nbplay()) {}

double SearchContext::elapsed_seconds() const {
  return std::chrono::duration<double>(Clock::now() - start_).count();
}

bool SearchContext::should_stop() {
  if (stopped_) return true;
  if (target_ && best_ && best_->score >= *target_) stopped_ = true;
  if (budget_.max_playouts && playouts_ >= *budget_.max_playouts) stopped_ = true;
  if (budget_.wall_seconds && elapsed_seconds() >= *budget_.wall_seconds) stopped_ = true;
  return stopped_;
}

void SearchContext::record_playout(const ChainState& origin, const ScoredSequence& result,
                                   bool track_best) {
  ++playouts_;
  if (track_best) offer(origin, result.score, result.moves);
}

void SearchContext::offer(const ChainState& origin, double score, std::span<const Move> suffix) {
  if (best_ && score <= best_->score) return;
  const auto prefix = origin.moves().subspan(root_depth_);
  ScoredSequence candidate{score, {}};
  candidate.moves.reserve(prefix.size() + suffix.size());
  candidate.moves.assign(prefix.begin(), prefix.end());
  candidate.moves.insert(candidate.moves.end(), suffix.begin(), suffix.end());
  best_ = std::move(candidate);
  time_to_best_ = elapsed_seconds();
}

}  // namespace hpfold
