#include "hpfold/nmcs.hpp"

namespace hpfold {

namespace {

class NestedSearch {
 public:
  NestedSearch(const PlayoutParams& playout, RngStream& rng, SearchContext& ctx)
      : playout_(playout), rng_(rng), ctx_(ctx) {}

  ScoredSequence run(ChainState state, int level) {
    if (level == 0) {
      ScoredSequence r = playout(state, playout_, rng_);
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
      for (Move m : state.legal_moves()) {
        if (ctx_.should_stop()) return best;
        ChainState child = state;
        child.apply_unchecked(m);
        ctx_.trace(state.nbplay(), m, level - 1);
        ScoredSequence r = run(std::move(child), level - 1);
        if (r.score != kNoScore && r.score >= best.score) {
          best.score = r.score;
          best.moves.resize(ply);
          best.moves.push_back(m);
          best.moves.insert(best.moves.end(), r.moves.begin(), r.moves.end());
        }
      }
      if (ctx_.stopped()) return best;
      state.apply_unchecked(best.moves[ply]);
      ++ply;
    }
    return best;
  }

 private:
  const PlayoutParams& playout_;
  RngStream& rng_;
  SearchContext& ctx_;
};

}  // namespace

ScoredSequence nmcs(const ChainState& s, const NmcsParams& params, RngStream& rng,
                    SearchContext& ctx) {
  if (params.level < 0) throw ContractViolation("NMCS level must be >= 0");
  return NestedSearch(params.playout, rng, ctx).run(s, params.level);
}

ScoredSequence nmcs(const ChainState& s, const NmcsParams& params, RngStream& rng) {
  SearchContext ctx(s);
  return nmcs(s, params, rng, ctx);
}

}  // namespace hpfold
