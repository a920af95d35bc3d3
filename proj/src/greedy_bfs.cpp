#include "hpfold/baselines.hpp"

namespace hpfold {

void GreedyFrontier::push(double evaluation, std::vector<Move> moves) {
  nodes_.insert(Node{evaluation, next_order_++, std::move(moves)});
  if (nodes_.size() > capacity_) {
    nodes_.erase(std::prev(nodes_.end()));
    ++evictions_;
  }
}

GreedyFrontier::Node GreedyFrontier::pop() {
  if (nodes_.empty()) throw ContractViolation("pop from an empty frontier");
  auto node = nodes_.extract(nodes_.begin());
  return std::move(node.value());
}

ScoredSequence greedy_bfs(const ChainState& root, const GreedyBfsParams& params, RngStream& rng,
                          SearchContext& ctx) {
  if (params.evals_per_node < 1) throw ContractViolation("evals_per_node must be >= 1");
  if (root.is_terminal()) {
    ctx.offer(root, score(root), {});
    return {score(root), {}};
  }

  GreedyFrontier frontier(std::max<std::size_t>(1, params.frontier_cap));
  frontier.push(0.0, {});
  std::uint64_t expansions = 0;
  while (!frontier.empty()) {
    if (ctx.should_stop()) break;
    if (params.max_expansions && expansions >= *params.max_expansions) break;
    GreedyFrontier::Node node = frontier.pop();
    ++expansions;

    ChainState state = root;
    for (Move m : node.moves) state.apply_unchecked(m);
    for (Move m : state.legal_moves()) {
      ChainState child = state;
      child.apply_unchecked(m);
      double sum = 0.0;
      for (int i = 0; i < params.evals_per_node; ++i) {
        ScoredSequence r = playout(child, params.playout, rng);
        ctx.record_playout(child, r);
        sum += r.score;
      }
      if (child.is_terminal()) continue;
      std::vector<Move> path = node.moves;
      path.push_back(m);
      frontier.push(sum / params.evals_per_node, std::move(path));
    }
  }
  if (!ctx.best()) return {kNoScore, {}};
  return *ctx.best();
}

}  // namespace hpfold
