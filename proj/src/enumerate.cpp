#include "hpfold/enumerate.hpp"

#include <stdexcept>

#include "hpfold/parallel.hpp"

namespace hpfold {

namespace {

// Dense-grid walker, deliberately independent of ChainState's hashed
// occupancy so the two can check each other.
class Walker {
 public:
  Walker(const HpSequence& seq, Dimension dim, bool symmetry)
      : seq_(seq), dim_(static_cast<int>(dim)), symmetry_(symmetry),
        n_(static_cast<int>(seq.size())), width_(2 * n_ + 1),
        grid_(static_cast<std::size_t>(width_) * width_ * (dim_ == 3 ? width_ : 1), 0) {
    coords_.reserve(seq.size());
    moves_.reserve(seq.size());
    place({0, 0, 0});
  }

  void push(Move m) {
    const LatticePoint p = coords_.back().step(m);
    contacts_stack_.push_back(contacts_);
    contacts_ += contacts_at(p, static_cast<int>(coords_.size()));
    place(p);
    moves_.push_back(m);
    const int stage = stages_.back();
    const int axis = axis_of(m);
    stages_.push_back(stage == 0 || (stage == 1 && axis != 0) || (stage == 2 && axis == 2) ? stage + 1
                                                                                       : stage);
  }

  void pop() {
    grid_[cell(coords_.back())] = 0;
    coords_.pop_back();
    moves_.pop_back();
    contacts_ = contacts_stack_.back();
    contacts_stack_.pop_back();
    stages_.pop_back();
  }

  bool allowed(Move m) const {
    const int axis = axis_of(m);
    if (axis >= dim_) return false;
    if (symmetry_) {
      const int stage = stages_.back();
      if (stage == 0 && m != Move::PosX) return false;
      if (stage == 1 && ((axis == 1 && m != Move::PosY) || axis == 2)) return false;
      if (stage == 2 && axis == 2 && m != Move::PosZ) return false;
    }
    return grid_[cell(coords_.back().step(m))] == 0;
  }

  bool complete() const { return static_cast<int>(coords_.size()) == n_; }
  int contacts() const { return contacts_; }
  const std::vector<Move>& moves() const { return moves_; }

 private:
  std::size_t cell(const LatticePoint& p) const {
    std::size_t idx = static_cast<std::size_t>(p.x + n_) * width_ + static_cast<std::size_t>(p.y + n_);
    if (dim_ == 3) idx = idx * width_ + static_cast<std::size_t>(p.z + n_);
    return idx;
  }

  void place(const LatticePoint& p) {
    grid_[cell(p)] = static_cast<int>(coords_.size()) + 1;
    coords_.push_back(p);
  }

  int contacts_at(const LatticePoint& p, int index) const {
    if (!seq_.is_h(static_cast<std::size_t>(index))) return 0;
    int c = 0;
    for (int d = 0; d < 2 * dim_; ++d) {
      const int other = grid_[cell(p.step(kAllMoves[static_cast<std::size_t>(d)]))] - 1;
      if (other >= 0 && other < index - 1 && seq_.is_h(static_cast<std::size_t>(other))) ++c;
    }
    return c;
  }

  const HpSequence& seq_;
  int dim_;
  bool symmetry_;
  int n_;
  int width_;
  std::vector<int> grid_;
  std::vector<LatticePoint> coords_;
  std::vector<Move> moves_;
  std::vector<int> contacts_stack_;
  std::vector<int> stages_{0};
  int contacts_ = 0;
};

void record_leaf(const Walker& w, bool trapped, EnumerationResult& out) {
  const int c = w.contacts();
  (trapped ? out.trapped_count : out.complete_count) += 1;
  if (!trapped && c > out.complete_optimum) out.complete_optimum = c;
  if (c > out.optimum) {
    out.optimum = c;
    out.optimal_count = 1;
    out.witness = w.moves();
  } else if (c == out.optimum) {
    ++out.optimal_count;
  }
}

void dfs(Walker& w, EnumerationResult& out) {
  if (w.complete()) {
    record_leaf(w, false, out);
    return;
  }
  bool any = false;
  for (Move m : kAllMoves) {
    if (!w.allowed(m)) continue;
    any = true;
    w.push(m);
    dfs(w, out);
    w.pop();
  }
  if (!any) record_leaf(w, true, out);
}

// Prefixes of length `depth` (or shorter when the chain ends first), in
// canonical DFS order.
void collect_prefixes(Walker& w, std::size_t depth, std::vector<std::vector<Move>>& out) {
  if (w.moves().size() == depth || w.complete()) {
    out.push_back(w.moves());
    return;
  }
  bool any = false;
  for (Move m : kAllMoves) {
    if (!w.allowed(m)) continue;
    any = true;
    w.push(m);
    collect_prefixes(w, depth, out);
    w.pop();
  }
  if (!any) out.push_back(w.moves());
}

EnumerationResult empty_result() {
  EnumerationResult r;
  r.optimum = -1;
  return r;
}

void merge(EnumerationResult& into, const EnumerationResult& part) {
  into.complete_count += part.complete_count;
  into.trapped_count += part.trapped_count;
  into.complete_optimum = std::max(into.complete_optimum, part.complete_optimum);
  if (part.optimal_count == 0) return;
  if (part.optimum > into.optimum) {
    into.optimum = part.optimum;
    into.optimal_count = part.optimal_count;
    into.witness = part.witness;
  } else if (part.optimum == into.optimum) {
    into.optimal_count += part.optimal_count;
  }
}

}  // namespace

std::size_t enumeration_limit(Dimension dim, bool symmetry_reduction) {
  if (dim == Dimension::Two) return symmetry_reduction ? 18 : 16;
  return symmetry_reduction ? 13 : 11;
}

EnumerationResult enumerate_serial(const HpSequence& seq, Dimension dim, bool symmetry_reduction) {
  Walker w(seq, dim, symmetry_reduction);
  EnumerationResult out = empty_result();
  dfs(w, out);
  return out;
}

EnumerationResult enumerate_parallel(const HpSequence& seq, Dimension dim,
                                     bool symmetry_reduction) {
  std::vector<std::vector<Move>> prefixes;
  {
    Walker w(seq, dim, symmetry_reduction);
    collect_prefixes(w, std::min<std::size_t>(seq.size() - 1, 6), prefixes);
  }

  std::vector<EnumerationResult> parts(prefixes.size(), empty_result());
  const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    Walker w(seq, dim, symmetry_reduction);
    for (Move m : prefixes[static_cast<std::size_t>(i)]) w.push(m);
    dfs(w, parts[static_cast<std::size_t>(i)]);
  }

  EnumerationResult out = empty_result();
  for (const auto& part : parts) merge(out, part);
  return out;
}

EnumerationResult enumerate(const HpSequence& seq, Dimension dim, bool symmetry_reduction) {
  const std::size_t limit = enumeration_limit(dim, symmetry_reduction);
  if (seq.size() > limit)
    throw std::invalid_argument("enumeration refused: chain length " + std::to_string(seq.size()) +
                                " exceeds the safety bound of " + std::to_string(limit) +
                                " residues for this lattice");
  return enumerate_parallel(seq, dim, symmetry_reduction);
}

}  // namespace hpfold
