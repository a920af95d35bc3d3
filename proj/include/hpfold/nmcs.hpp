#pragma once

#include "hpfold/playout.hpp"
#include "hpfold/search.hpp"

namespace hpfold {

struct NmcsParams {
  int level = 3;  // 0 is a single playout
  PlayoutParams playout{};
};

/// Nested Monte Carlo Search from `s`.
///
/// Each ply evaluates every legal child with a level-1 search, keeps the
/// best sequence seen (ties go to the later child), and advances along it.
/// Returns the best score and the moves after `s`. When the context stops
/// the search, the partial best is returned (score kNoScore if nothing
/// finished); `ctx.best()` always holds a complete folding.
ScoredSequence nmcs(const ChainState& s, const NmcsParams& params, RngStream& rng,
                    SearchContext& ctx);

/// Unbudgeted convenience overload.
ScoredSequence nmcs(const ChainState& s, const NmcsParams& params, RngStream& rng);

}  // namespace hpfold
