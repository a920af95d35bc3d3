#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "hpfold/playout.hpp"
#include "hpfold/search.hpp"

namespace hpfold {

// ---------------------------------------------------------------- NRPA --

enum class MoveCoding {
  Ply,    // (residues already placed, direction)
  LastK,  // (last k moves, direction)
};

/// Key into an NRPA policy.
struct MoveCode {
  std::uint64_t key = 0;

  static MoveCode ply(std::size_t residues_placed, Move direction) noexcept {
    return {static_cast<std::uint64_t>(residues_placed) * 8 + static_cast<std::uint64_t>(direction)};
  }
  /// `history` is the full move list so far; only its last `k` entries matter.
  static MoveCode last_k(std::span<const Move> history, int k, Move direction) noexcept;

  friend bool operator==(const MoveCode&, const MoveCode&) = default;
};

/// Log-space move preferences; absent codes weigh 0.
class Policy {
 public:
  double weight(MoveCode code) const noexcept {
    auto it = weights_.find(code.key);
    return it == weights_.end() ? 0.0 : it->second;
  }
  void add(MoveCode code, double delta) { weights_[code.key] += delta; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::unordered_map<std::uint64_t, double> weights_;
};

struct NrpaParams {
  int level = 3;
  int iterations = 100;
  double alpha = 1.0;
  /// GNRPA prior: logit += bias * immediate gain. 0 gives plain NRPA.
  double bias = 0.0;
  RewardScheme reward{};
  MoveCoding coding = MoveCoding::Ply;
  int last_k = 3;
};

/// Nested Rollout Policy Adaptation (GNRPA when params.bias != 0) from
/// `root`. Returns the best sequence of moves after `root`.
ScoredSequence nrpa(const ChainState& root, const NrpaParams& params, RngStream& rng,
                    SearchContext& ctx);

/// GNRPA: NRPA with the biased-growth prior added to every logit.
ScoredSequence gnrpa(const ChainState& root, NrpaParams params, double bias, RngStream& rng,
                     SearchContext& ctx);

/// One policy-guided playout (exposed for testing).
ScoredSequence nrpa_playout(const ChainState& root, const Policy& policy,
                            const NrpaParams& params, RngStream& rng);

/// Shifts `policy` toward `moves` (played from `root`) by step alpha.
Policy nrpa_adapt(const ChainState& root, const Policy& policy, std::span<const Move> moves,
                  const NrpaParams& params);

// ---------------------------------------------------------- Greedy BFS --

/// Best-first frontier: highest evaluation first, earlier insertion wins
/// ties. Over capacity, the worst (lowest, then latest) node is evicted.
class GreedyFrontier {
 public:
  struct Node {
    double evaluation = 0.0;
    std::uint64_t order = 0;
    std::vector<Move> moves;  // from the search root
  };

  explicit GreedyFrontier(std::size_t capacity) : capacity_(capacity) {}

  void push(double evaluation, std::vector<Move> moves);
  Node pop();
  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::uint64_t evictions() const noexcept { return evictions_; }

 private:
  struct Order {
    bool operator()(const Node& a, const Node& b) const noexcept {
      if (a.evaluation != b.evaluation) return a.evaluation > b.evaluation;
      return a.order < b.order;
    }
  };

  std::size_t capacity_;
  std::uint64_t next_order_ = 0;
  std::uint64_t evictions_ = 0;
  std::set<Node, Order> nodes_;
};

struct GreedyBfsParams {
  int evals_per_node = 1;
  PlayoutParams playout{};
  std::size_t frontier_cap = 1'000'000;
  std::optional<std::uint64_t> max_expansions;
};

ScoredSequence greedy_bfs(const ChainState& root, const GreedyBfsParams& params, RngStream& rng,
                          SearchContext& ctx);

// ----------------------------------------------------------------- UCT --

struct UctParams {
  double exploration = 0.4;
  PlayoutParams playout{};
  std::size_t node_cap = 4'000'000;
  std::optional<std::uint64_t> max_iterations;
};

/// Single-player UCT tree over chain-growth states.
class UctTree {
 public:
  struct Node {
    std::int32_t parent = -1;
    std::int32_t first_child = -1;
    std::uint8_t child_count = 0;
    bool expanded = false;
    Move move = Move::PosX;
    std::uint64_t visits = 0;
    std::uint64_t leaf_visits = 0;  // iterations whose descent ended here
    double total = 0.0;
  };

  UctTree(const ChainState& root, const UctParams& params);

  /// One select/expand/playout/backpropagate pass. Returns the playout
  /// (score and moves after the root).
  ScoredSequence iterate(RngStream& rng);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  double reward_scale() const noexcept { return reward_scale_; }

 private:
  std::int32_t select_child(const Node& node) const;

  ChainState root_;
  UctParams params_;
  std::vector<Node> nodes_;
  double reward_scale_ = 1.0;
};

ScoredSequence uct(const ChainState& root, const UctParams& params, RngStream& rng,
                   SearchContext& ctx);

}  // namespace hpfold
