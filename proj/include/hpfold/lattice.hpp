#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hpfold/geometry.hpp"
#include "hpfold/occupancy.hpp"

namespace hpfold {

/// Raised when an operation is called outside its precondition
/// (illegal move, empty choice set, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed HP text. Carries the offending character index.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class Residue : std::uint8_t { H, P };

class HpSequence {
 public:
  explicit HpSequence(std::vector<Residue> residues);

  std::size_t size() const noexcept { return residues_.size(); }
  Residue operator[](std::size_t i) const noexcept { return residues_[i]; }
  bool is_h(std::size_t i) const noexcept { return residues_[i] == Residue::H; }
  std::span<const Residue> residues() const noexcept { return residues_; }
  std::size_t count_h() const noexcept;

  std::string to_string() const;

  friend bool operator==(const HpSequence&, const HpSequence&) = default;

 private:
  std::vector<Residue> residues_;
};

/// Parses "HPPH..." ignoring whitespace. Throws ParseError on any other
/// character or on empty input.
HpSequence parse_sequence(std::string_view text);

/// Reads a sequence file: one HP string per line, `#` starts a comment.
std::vector<HpSequence> read_sequence_file(const std::string& path);

/// Per-contact weights used to guide playouts. The search objective always
/// counts H-H contacts only; this scheme only shapes the softmax.
struct RewardScheme {
  double hh_gain = 1.0;
  double hp_penalty = -0.2;
  double pp_gain = 0.0;

  static constexpr RewardScheme contacts_only() { return {1.0, 0.0, 0.0}; }
};

/// Fixed-capacity list of legal moves (at most six).
class MoveList {
 public:
  void push_back(Move m) noexcept { moves_[size_++] = m; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Move operator[](std::size_t i) const noexcept { return moves_[i]; }
  const Move* begin() const noexcept { return moves_.data(); }
  const Move* end() const noexcept { return moves_.data() + size_; }
  std::span<const Move> span() const noexcept { return {moves_.data(), size_}; }

 private:
  std::array<Move, 6> moves_{};
  std::size_t size_ = 0;
};

/// A partial chain-growth folding.
///
/// The first residue sits at the origin. With symmetry reduction on, the
/// first move is +x, the first move leaving the x axis is +y, and (in 3D)
/// the first move leaving the xy plane is +z. This removes the 8 (2D) or
/// 48 (3D) lattice symmetries without losing any conformation up to
/// rotation/reflection.
class ChainState {
 public:
  ChainState(std::shared_ptr<const HpSequence> sequence, Dimension dim,
             bool symmetry_reduction = true);

  const HpSequence& sequence() const noexcept { return *sequence_; }
  const std::shared_ptr<const HpSequence>& sequence_ptr() const noexcept { return sequence_; }
  Dimension dimension() const noexcept { return dim_; }
  bool symmetry_reduction() const noexcept { return symmetry_; }

  std::span<const LatticePoint> placed() const noexcept { return placed_; }
  std::span<const Move> moves() const noexcept { return moves_; }
  std::size_t nbplay() const noexcept { return moves_.size(); }
  int contacts() const noexcept { return contacts_; }
  bool complete() const noexcept { return placed_.size() == sequence_->size(); }

  /// Residue index occupying `p`, or -1.
  int occupant(const LatticePoint& p) const noexcept { return occupancy_.find(p); }

  MoveList legal_moves() const noexcept;
  bool is_legal(Move m) const noexcept;
  bool is_terminal() const noexcept { return complete() || legal_moves().empty(); }

  /// Guidance gain for placing the next residue via `m` (no legality check).
  double gain_unchecked(Move m, const RewardScheme& reward) const noexcept;
  /// H-H contacts the next residue would create via `m`.
  int contact_gain_unchecked(Move m) const noexcept;

  /// Places the next residue. Throws ContractViolation on an illegal move.
  void apply(Move m);
  /// As apply() but the caller guarantees legality.
  void apply_unchecked(Move m) noexcept;

 private:
  std::shared_ptr<const HpSequence> sequence_;
  Dimension dim_;
  bool symmetry_;
  // 0: only the origin placed, 1: still on the x axis, 2: still in the
  // xy plane, 3: unrestricted.
  std::uint8_t sym_stage_ = 0;
  std::vector<LatticePoint> placed_;
  std::vector<Move> moves_;
  OccupancyTable occupancy_;
  int contacts_ = 0;
};

ChainState initial_state(const HpSequence& seq, Dimension dim, bool symmetry_reduction = true);
ChainState initial_state(std::shared_ptr<const HpSequence> seq, Dimension dim,
                         bool symmetry_reduction = true);

MoveList legal_moves(const ChainState& s);
double immediate_gain(const ChainState& s, Move m, const RewardScheme& reward);
ChainState play(const ChainState& s, Move m);
inline bool is_terminal(const ChainState& s) { return s.is_terminal(); }
/// Objective: accumulated H-H contacts (= -E). Trapped chains keep what
/// they have accumulated.
inline double score(const ChainState& s) { return s.contacts(); }

/// Replays `moves` from the initial state; throws ContractViolation if any
/// move is illegal.
ChainState replay(std::shared_ptr<const HpSequence> seq, Dimension dim,
                  std::span<const Move> moves, bool symmetry_reduction = false);

/// O(n^2) pairwise count of non-consecutive adjacent H-H pairs.
int count_contacts(const HpSequence& seq, std::span<const LatticePoint> placed);

/// Writes `index kind x y [z]`, one line per placed residue.
void write_conformation(std::ostream& out, const ChainState& s);

struct ScoredSequence {
  double score = 0.0;
  std::vector<Move> moves;
};

}  // namespace hpfold
