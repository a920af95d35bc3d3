#include <cmath>

#include "hpfold/baselines.hpp"

namespace hpfold {

UctTree::UctTree(const ChainState& root, const UctParams& params)
    : root_(root), params_(params) {
  if (params_.exploration < 0.0) throw ContractViolation("UCT exploration must be >= 0");
  nodes_.push_back(Node{});
}

std::int32_t UctTree::select_child(const Node& node) const {
  std::int32_t best = -1;
  double best_value = kNoScore;
  const double log_parent = std::log(static_cast<double>(node.visits));
  for (std::int32_t c = node.first_child; c < node.first_child + node.child_count; ++c) {
    const Node& child = nodes_[static_cast<std::size_t>(c)];
    if (child.visits == 0) return c;
    const double mean = child.total / static_cast<double>(child.visits) / reward_scale_;
    const double value =
        mean + params_.exploration * std::sqrt(log_parent / static_cast<double>(child.visits));
    if (value > best_value) {
      best_value = value;
      best = c;
    }
  }
  return best;
}

ScoredSequence UctTree::iterate(RngStream& rng) {
  ChainState state = root_;
  std::vector<std::int32_t> path{0};
  std::int32_t current = 0;
  while (!state.is_terminal()) {
    Node& node = nodes_[static_cast<std::size_t>(current)];
    if (current != 0 && node.visits == 0) break;
    if (!node.expanded) {
      if (nodes_.size() >= params_.node_cap) break;
      const MoveList moves = state.legal_moves();
      const auto first = static_cast<std::int32_t>(nodes_.size());
      node.expanded = true;
      node.first_child = first;
      node.child_count = static_cast<std::uint8_t>(moves.size());
      for (Move m : moves) {
        Node child;
        child.parent = current;
        child.move = m;
        nodes_.push_back(child);  // invalidates `node`
      }
    }
    current = select_child(nodes_[static_cast<std::size_t>(current)]);
    state.apply_unchecked(nodes_[static_cast<std::size_t>(current)].move);
    path.push_back(current);
  }

  ScoredSequence r = playout(state, params_.playout, rng);
  const double value = r.score;
  if (value > reward_scale_) reward_scale_ = value;
  nodes_[static_cast<std::size_t>(path.back())].leaf_visits += 1;
  for (std::int32_t id : path) {
    Node& n = nodes_[static_cast<std::size_t>(id)];
    n.visits += 1;
    n.total += value;
  }

  const auto all = state.moves();
  std::vector<Move> moves(all.begin() + static_cast<long>(root_.nbplay()), all.end());
  moves.insert(moves.end(), r.moves.begin(), r.moves.end());
  return {value, std::move(moves)};
}

ScoredSequence uct(const ChainState& root, const UctParams& params, RngStream& rng,
                   SearchContext& ctx) {
  if (!params.max_iterations && !ctx.budget().limited())
    throw ContractViolation("UCT needs an iteration cap or a search budget");
  UctTree tree(root, params);
  std::uint64_t iterations = 0;
  do {
    ScoredSequence r = tree.iterate(rng);
    ctx.record_playout(root, r);
    ++iterations;
    if (params.max_iterations && iterations >= *params.max_iterations) break;
  } while (!ctx.should_stop());
  return *ctx.best();
}

}  // namespace hpfold
