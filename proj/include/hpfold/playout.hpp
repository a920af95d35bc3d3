#pragma once

#include <span>

#include "hpfold/lattice.hpp"
#include "hpfold/rng.hpp"

namespace hpfold {

struct PlayoutParams {
  double bias = 20.0;  // softmax inverse temperature; 0 gives uniform growth
  RewardScheme reward{};
};

/// Normalized softmax of already-scaled gains. Max-subtracted, so large
/// exponents (bias 20 x gain 3) stay finite.
void softmax_probabilities(std::span<const double> weighted_gains, std::span<double> out);

/// Samples one move with probability exp(w[i]) / sum_j exp(w[j]).
/// A single candidate is returned without consuming randomness.
Move softmax_choice(std::span<const Move> moves, std::span<const double> weighted_gains,
                    RngStream& rng);

/// Biased chain growth from `s` until terminal. Returns the terminal
/// contact count and the moves played after `s`.
ScoredSequence playout(const ChainState& s, const PlayoutParams& params, RngStream& rng);

/// Same draw sequence as playout(), growing `s` in place.
void playout_in_place(ChainState& s, const PlayoutParams& params, RngStream& rng);

}  // namespace hpfold
