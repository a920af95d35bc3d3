#include "hpfold/playout.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hpfold {

void softmax_probabilities(std::span<const double> weighted_gains, std::span<double> out) {
  if (weighted_gains.empty()) throw ContractViolation("softmax over an empty gain vector");
  if (out.size() != weighted_gains.size())
    throw ContractViolation("softmax output size mismatch");
  const double top = *std::max_element(weighted_gains.begin(), weighted_gains.end());
  double total = 0.0;
  for (std::size_t i = 0; i < weighted_gains.size(); ++i) {
    out[i] = std::exp(weighted_gains[i] - top);
    total += out[i];
  }
  for (double& p : out) p /= total;
}

Move softmax_choice(std::span<const Move> moves, std::span<const double> weighted_gains,
                    RngStream& rng) {
  if (moves.empty()) throw ContractViolation("softmax_choice over an empty move list");
  if (moves.size() != weighted_gains.size())
    throw ContractViolation("softmax_choice: moves and gains differ in length");
  if (moves.size() == 1) return moves[0];

  std::array<double, 6> weights{};
  const double top = *std::max_element(weighted_gains.begin(), weighted_gains.end());
  double total = 0.0;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    weights[i] = std::exp(weighted_gains[i] - top);
    total += weights[i];
  }
  double r = rng.uniform() * total;
  for (std::size_t i = 0; i + 1 < moves.size(); ++i) {
    if (r < weights[i]) return moves[i];
    r -= weights[i];
  }
  return moves[moves.size() - 1];
}

void playout_in_place(ChainState& s, const PlayoutParams& params, RngStream& rng) {
  std::array<double, 6> gains{};
  while (!s.complete()) {
    const MoveList moves = s.legal_moves();
    if (moves.empty()) break;
    for (std::size_t i = 0; i < moves.size(); ++i)
      gains[i] = s.gain_unchecked(moves[i], params.reward) * params.bias;
    s.apply_unchecked(softmax_choice(moves.span(), {gains.data(), moves.size()}, rng));
  }
}

ScoredSequence playout(const ChainState& s, const PlayoutParams& params, RngStream& rng) {
  ChainState current = s;
  playout_in_place(current, params, rng);
  const auto all = current.moves();
  return ScoredSequence{score(current),
                        std::vector<Move>(all.begin() + static_cast<long>(s.nbplay()), all.end())};
}

}  // namespace hpfold
