#include <array>
#include <cmath>

#include "hpfold/baselines.hpp"

namespace hpfold {

MoveCode MoveCode::last_k(std::span<const Move> history, int k, Move direction) noexcept {
  std::uint64_t key = 1;  // keeps last-k keys disjoint from ply keys of short chains
  const std::size_t n = history.size();
  for (int i = 1; i <= k; ++i) {
    std::uint64_t digit = static_cast<std::size_t>(i) <= n
                              ? static_cast<std::uint64_t>(history[n - static_cast<std::size_t>(i)]) + 1
                              : 0;
    key = key * 8 + digit;
  }
  return {(key * 8 + static_cast<std::uint64_t>(direction)) | (1ull << 63)};
}

namespace {

MoveCode code_for(const ChainState& s, Move m, const NrpaParams& params) {
  if (params.coding == MoveCoding::Ply) return MoveCode::ply(s.placed().size(), m);
  return MoveCode::last_k(s.moves(), params.last_k, m);
}

void fill_logits(const ChainState& s, const MoveList& moves, const Policy& policy,
                 const NrpaParams& params, std::array<double, 6>& logits) {
  for (std::size_t i = 0; i < moves.size(); ++i) {
    logits[i] = policy.weight(code_for(s, moves[i], params));
    if (params.bias != 0.0) logits[i] += params.bias * s.gain_unchecked(moves[i], params.reward);
  }
}

class NestedRollout {
 public:
  NestedRollout(const ChainState& root, const NrpaParams& params, RngStream& rng,
                SearchContext& ctx)
      : root_(root), params_(params), rng_(rng), ctx_(ctx) {}

  ScoredSequence run(int level, Policy policy) {
    if (level == 0) {
      ScoredSequence r = nrpa_playout(root_, policy, params_, rng_);
      ctx_.record_playout(root_, r);
      return r;
    }
    ScoredSequence best{kNoScore, {}};
    for (int i = 0; i < params_.iterations; ++i) {
      if (i > 0 && ctx_.should_stop()) break;
      ScoredSequence r = run(level - 1, policy);
      if (r.score != kNoScore && r.score >= best.score) best = std::move(r);
      if (ctx_.stopped()) break;
      policy = nrpa_adapt(root_, policy, best.moves, params_);
    }
    return best;
  }

 private:
  const ChainState& root_;
  const NrpaParams& params_;
  RngStream& rng_;
  SearchContext& ctx_;
};

}  // namespace

ScoredSequence nrpa_playout(const ChainState& root, const Policy& policy,
                            const NrpaParams& params, RngStream& rng) {
  ChainState s = root;
  std::array<double, 6> logits{};
  while (!s.complete()) {
    const MoveList moves = s.legal_moves();
    if (moves.empty()) break;
    fill_logits(s, moves, policy, params, logits);
    s.apply_unchecked(softmax_choice(moves.span(), {logits.data(), moves.size()}, rng));
  }
  const auto all = s.moves();
  return {score(s), std::vector<Move>(all.begin() + static_cast<long>(root.nbplay()), all.end())};
}

Policy nrpa_adapt(const ChainState& root, const Policy& policy, std::span<const Move> moves,
                  const NrpaParams& params) {
  Policy next = policy;
  ChainState s = root;
  std::array<double, 6> logits{};
  std::array<double, 6> probs{};
  for (Move played : moves) {
    const MoveList legal = s.legal_moves();
    fill_logits(s, legal, policy, params, logits);
    softmax_probabilities({logits.data(), legal.size()}, {probs.data(), legal.size()});
    next.add(code_for(s, played, params), params.alpha);
    for (std::size_t i = 0; i < legal.size(); ++i)
      next.add(code_for(s, legal[i], params), -params.alpha * probs[i]);
    s.apply(played);
  }
  return next;
}

ScoredSequence nrpa(const ChainState& root, const NrpaParams& params, RngStream& rng,
                    SearchContext& ctx) {
  if (params.level < 0) throw ContractViolation("NRPA level must be >= 0");
  if (params.iterations < 1) throw ContractViolation("NRPA iterations must be >= 1");
  return NestedRollout(root, params, rng, ctx).run(params.level, Policy{});
}

ScoredSequence gnrpa(const ChainState& root, NrpaParams params, double bias, RngStream& rng,
                     SearchContext& ctx) {
  params.bias = bias;
  return nrpa(root, params, rng, ctx);
}

}  // namespace hpfold
