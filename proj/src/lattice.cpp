#include "hpfold/lattice.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace hpfold {

namespace {

constexpr char kLetters[6] = {'R', 'L', 'U', 'D', 'F', 'B'};

}  // namespace

char move_letter(Move m) noexcept { return kLetters[static_cast<int>(m)]; }

Move move_from_letter(char c) {
  for (int i = 0; i < 6; ++i)
    if (kLetters[i] == c) return static_cast<Move>(i);
  throw ParseError(std::string("invalid move letter '") + c + "'", 0);
}

std::string moves_to_string(std::span<const Move> moves) {
  std::string out;
  out.reserve(moves.size());
  for (Move m : moves) out.push_back(move_letter(m));
  return out;
}

std::vector<Move> moves_from_string(std::string_view text) {
  std::vector<Move> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    try {
      out.push_back(move_from_letter(text[i]));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), i);
    }
  }
  return out;
}

bool adjacent(const LatticePoint& a, const LatticePoint& b) noexcept {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z) == 1;
}

HpSequence::HpSequence(std::vector<Residue> residues) : residues_(std::move(residues)) {
  if (residues_.empty()) throw ContractViolation("HP sequence must contain at least one residue");
}

std::size_t HpSequence::count_h() const noexcept {
  std::size_t n = 0;
  for (Residue r : residues_) n += r == Residue::H;
  return n;
}

std::string HpSequence::to_string() const {
  std::string s;
  s.reserve(residues_.size());
  for (Residue r : residues_) s.push_back(r == Residue::H ? 'H' : 'P');
  return s;
}

HpSequence parse_sequence(std::string_view text) {
  std::vector<Residue> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'H') {
      out.push_back(Residue::H);
    } else if (c == 'P') {
      out.push_back(Residue::P);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("invalid residue '" + std::string(1, c) + "' at index " + std::to_string(i),
                       i);
    }
  }
  if (out.empty()) throw ParseError("empty HP sequence", 0);
  return HpSequence(std::move(out));
}

std::vector<HpSequence> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path);
  std::vector<HpSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.push_back(parse_sequence(line));
  }
  return out;
}

ChainState::ChainState(std::shared_ptr<const HpSequence> sequence, Dimension dim,
                       bool symmetry_reduction)
    : sequence_(std::move(sequence)), dim_(dim), symmetry_(symmetry_reduction) {
  if (!sequence_) throw ContractViolation("null sequence");
  const std::size_t n = sequence_->size();
  if (n > static_cast<std::size_t>(OccupancyTable::kMaxCoord))
    throw ContractViolation("sequence too long for the lattice coordinate range");
  placed_.reserve(n);
  moves_.reserve(n);
  occupancy_ = OccupancyTable(n);
  placed_.push_back(LatticePoint{});
  occupancy_.insert(LatticePoint{}, 0);
}

bool ChainState::is_legal(Move m) const noexcept {
  if (complete()) return false;
  const int axis = axis_of(m);
  if (axis >= static_cast<int>(dim_)) return false;
  if (symmetry_) {
    switch (sym_stage_) {
      case 0:
        if (m != Move::PosX) return false;
        break;
      case 1:
        if (axis != 0 && m != Move::PosY) return false;
        break;
      case 2:
        if (axis == 2 && m != Move::PosZ) return false;
        break;
      default:
        break;
    }
  }
  return !occupancy_.contains(placed_.back().step(m));
}

MoveList ChainState::legal_moves() const noexcept {
  MoveList out;
  const int dirs = num_directions(dim_);
  for (int i = 0; i < dirs; ++i)
    if (is_legal(kAllMoves[i])) out.push_back(kAllMoves[i]);
  return out;
}

double ChainState::gain_unchecked(Move m, const RewardScheme& reward) const noexcept {
  const int incoming = static_cast<int>(placed_.size());
  const bool incoming_h = sequence_->is_h(incoming);
  const LatticePoint target = placed_.back().step(m);
  const int dirs = num_directions(dim_);
  double gain = 0.0;
  for (int i = 0; i < dirs; ++i) {
    const int idx = occupancy_.find(target.step(kAllMoves[i]));
    if (idx < 0 || idx == incoming - 1) continue;
    const bool other_h = sequence_->is_h(idx);
    if (incoming_h && other_h)
      gain += reward.hh_gain;
    else if (incoming_h != other_h)
      gain += reward.hp_penalty;
    else
      gain += reward.pp_gain;
  }
  return gain;
}

int ChainState::contact_gain_unchecked(Move m) const noexcept {
  const int incoming = static_cast<int>(placed_.size());
  if (!sequence_->is_h(incoming)) return 0;
  const LatticePoint target = placed_.back().step(m);
  const int dirs = num_directions(dim_);
  int gain = 0;
  for (int i = 0; i < dirs; ++i) {
    const int idx = occupancy_.find(target.step(kAllMoves[i]));
    if (idx >= 0 && idx != incoming - 1 && sequence_->is_h(idx)) ++gain;
  }
  return gain;
}

void ChainState::apply(Move m) {
  if (!is_legal(m))
    throw ContractViolation(std::string("illegal move '") + move_letter(m) + "' at ply " +
                            std::to_string(nbplay()));
  apply_unchecked(m);
}

void ChainState::apply_unchecked(Move m) noexcept {
  contacts_ += contact_gain_unchecked(m);
  const LatticePoint target = placed_.back().step(m);
  occupancy_.insert(target, static_cast<int>(placed_.size()));
  placed_.push_back(target);
  moves_.push_back(m);
  const int axis = axis_of(m);
  if (sym_stage_ == 0 || (sym_stage_ == 1 && axis != 0) || (sym_stage_ == 2 && axis == 2))
    ++sym_stage_;
}

ChainState initial_state(const HpSequence& seq, Dimension dim, bool symmetry_reduction) {
  return ChainState(std::make_shared<const HpSequence>(seq), dim, symmetry_reduction);
}

ChainState initial_state(std::shared_ptr<const HpSequence> seq, Dimension dim,
                         bool symmetry_reduction) {
  return ChainState(std::move(seq), dim, symmetry_reduction);
}

MoveList legal_moves(const ChainState& s) { return s.legal_moves(); }

double immediate_gain(const ChainState& s, Move m, const RewardScheme& reward) {
  if (!s.is_legal(m))
    throw ContractViolation(std::string("immediate_gain on illegal move '") + move_letter(m) + "'");
  return s.gain_unchecked(m, reward);
}

ChainState play(const ChainState& s, Move m) {
  ChainState next = s;
  next.apply(m);
  return next;
}

ChainState replay(std::shared_ptr<const HpSequence> seq, Dimension dim,
                  std::span<const Move> moves, bool symmetry_reduction) {
  ChainState s(std::move(seq), dim, symmetry_reduction);
  for (Move m : moves) s.apply(m);
  return s;
}

int count_contacts(const HpSequence& seq, std::span<const LatticePoint> placed) {
  int contacts = 0;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!seq.is_h(i)) continue;
    for (std::size_t j = i + 2; j < placed.size(); ++j)
      if (seq.is_h(j) && adjacent(placed[i], placed[j])) ++contacts;
  }
  return contacts;
}

void write_conformation(std::ostream& out, const ChainState& s) {
  const auto placed = s.placed();
  for (std::size_t i = 0; i < placed.size(); ++i) {
    out << i << ' ' << (s.sequence().is_h(i) ? 'H' : 'P') << ' ' << placed[i].x << ' '
        << placed[i].y;
    if (s.dimension() == Dimension::Three) out << ' ' << placed[i].z;
    out << '\n';
  }
}

}  // namespace hpfold
