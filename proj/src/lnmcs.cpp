#include "hpfold/lnmcs.hpp"

#include <algorithm>

namespace hpfold {

ThresholdTable::ThresholdTable(ThresholdPolicy policy, std::size_t median_window)
    : policy_(policy), median_window_(std::max<std::size_t>(1, median_window)) {}

double ThresholdTable::threshold(std::size_t depth) const noexcept {
  return depth < entries_.size() ? entries_[depth].value : 0.0;
}

std::size_t ThresholdTable::samples(std::size_t depth) const noexcept {
  return depth < entries_.size() ? entries_[depth].count : 0;
}

double ThresholdTable::update(std::size_t depth, double estimate) {
  while (entries_.size() < depth + 1) entries_.emplace_back();
  Entry& e = entries_[depth];
  ++e.count;
  switch (policy_) {
    case ThresholdPolicy::Max:
      e.value = std::max(e.value, estimate);
      break;
    case ThresholdPolicy::Mean:
      e.value += (estimate - e.value) / static_cast<double>(e.count);
      break;
    case ThresholdPolicy::Median: {
      e.window.push_back(estimate);
      if (e.window.size() > median_window_) e.window.pop_front();
      std::vector<double> sorted(e.window.begin(), e.window.end());
      std::sort(sorted.begin(), sorted.end());
      const std::size_t mid = sorted.size() / 2;
      e.value = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
      break;
    }
  }
  return e.value;
}

ChildEvaluation evaluate_child(const ChainState& child, const LnmcsParams& params,
                               RngStream& rng) {
  if (params.eval_playouts < 1) throw ContractViolation("eval_playouts must be >= 1");
  ChildEvaluation out{0.0, {kNoScore, {}}};
  double sum = 0.0;
  for (int i = 0; i < params.eval_playouts; ++i) {
    ScoredSequence r = playout(child, params.playout, rng);
    sum += r.score;
    if (r.score > out.best_seen.score) out.best_seen = std::move(r);
  }
  out.estimate = sum / params.eval_playouts;
  return out;
}

namespace {

class LazySearch {
 public:
  LazySearch(const LnmcsParams& params, ThresholdTable& table, RngStream& rng,
             SearchContext& ctx)
      : params_(params), table_(table), rng_(rng), eval_rng_(rng.split(kEvalStreamKey)),
        ctx_(ctx) {}

  ScoredSequence run(ChainState state, int level) {
    if (level == 0) {
      ScoredSequence r = playout(state, params_.playout, rng_);
      ctx_.record_playout(state, r);
      return r;
    }
    if (state.is_terminal()) {
      ctx_.offer(state, score(state), {});
      return {score(state), {}};
    }

    ScoredSequence best{kNoScore, {}};
    std::size_t ply = 0;
    while (!state.is_terminal()) {
      const std::size_t depth = state.nbplay();
      const MoveList moves = state.legal_moves();
      if (params_.two_pass) {
        std::vector<ChainState> children;
        std::vector<double> estimates;
        children.reserve(moves.size());
        for (Move m : moves) {
          if (ctx_.should_stop()) return best;
          ChainState& child = children.emplace_back(state);
          child.apply_unchecked(m);
          estimates.push_back(evaluate(child, m, ply, best));
          table_.update(depth, estimates.back());
        }
        const double cut = params_.ratio * table_.threshold(depth);
        for (std::size_t i = 0; i < moves.size(); ++i) {
          if (ctx_.should_stop()) return best;
          const int next_level = estimates[i] < cut ? 0 : level - 1;
          ctx_.log_decision({depth, i, moves.size(), moves[i], estimates[i], cut, level, next_level});
          descend(std::move(children[i]), depth, moves[i], next_level, ply, best);
        }
      } else {
        for (std::size_t i = 0; i < moves.size(); ++i) {
          const Move m = moves[i];
          if (ctx_.should_stop()) return best;
          ChainState child = state;
          child.apply_unchecked(m);
          const double estimate = evaluate(child, m, ply, best);
          table_.update(depth, estimate);
          const double cut = params_.ratio * table_.threshold(depth);
          const int next_level = estimate < cut ? 0 : level - 1;
          ctx_.log_decision({depth, i, moves.size(), m, estimate, cut, level, next_level});
          descend(std::move(child), depth, m, next_level, ply, best);
        }
      }
      if (ctx_.stopped()) return best;
      state.apply_unchecked(best.moves[ply]);
      ++ply;
    }
    return best;
  }

 private:
  static void consider(ScoredSequence& best, std::size_t ply, Move m, const ScoredSequence& r) {
    if (r.score == kNoScore || r.score < best.score) return;
    best.score = r.score;
    best.moves.resize(ply);
    best.moves.push_back(m);
    best.moves.insert(best.moves.end(), r.moves.begin(), r.moves.end());
  }

  double evaluate(const ChainState& child, Move m, std::size_t ply, ScoredSequence& best) {
    ChildEvaluation ev = evaluate_child(child, params_, eval_rng_);
    ctx_.count_playouts(static_cast<std::uint64_t>(params_.eval_playouts));
    if (params_.retain_eval_best) {
      ctx_.offer(child, ev.best_seen.score, ev.best_seen.moves);
      consider(best, ply, m, ev.best_seen);
    }
    return ev.estimate;
  }

  void descend(ChainState child, std::size_t depth, Move m, int level, std::size_t ply,
               ScoredSequence& best) {
    ctx_.trace(depth, m, level);
    consider(best, ply, m, run(std::move(child), level));
  }

  const LnmcsParams& params_;
  ThresholdTable& table_;
  RngStream& rng_;
  RngStream eval_rng_;
  SearchContext& ctx_;
};

}  // namespace

ScoredSequence lnmcs(const ChainState& s, const LnmcsParams& params, ThresholdTable& table,
                     RngStream& rng, SearchContext& ctx) {
  if (params.level < 0) throw ContractViolation("LNMCS level must be >= 0");
  if (params.eval_playouts < 1) throw ContractViolation("eval_playouts must be >= 1");
  if (table.policy() != params.threshold_policy)
    throw ContractViolation("threshold table policy does not match the parameters");
  return LazySearch(params, table, rng, ctx).run(s, params.level);
}

ScoredSequence lnmcs(const ChainState& s, const LnmcsParams& params, ThresholdTable& table,
                     RngStream& rng) {
  SearchContext ctx(s);
  return lnmcs(s, params, table, rng, ctx);
}

}  // namespace hpfold
