#pragma once

#include <cstdint>
#include <vector>

#include "hpfold/lattice.hpp"

namespace hpfold {

/// Exhaustive optimum over every self-avoiding chain-growth folding.
/// "Terminal" covers complete chains and chains whose head got trapped,
/// which is the set of states searches can end in.
struct EnumerationResult {
  int optimum = 0;           // best contact count over terminal states
  int complete_optimum = -1; // best over complete chains only (-1: none)
  std::uint64_t complete_count = 0;
  std::uint64_t trapped_count = 0;
  std::uint64_t optimal_count = 0;  // terminal states scoring `optimum`
  std::vector<Move> witness;        // first optimal folding in canonical order

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

/// Largest chain length enumerate() accepts.
std::size_t enumeration_limit(Dimension dim, bool symmetry_reduction);

/// Single-threaded depth-first enumeration.
EnumerationResult enumerate_serial(const HpSequence& seq, Dimension dim, bool symmetry_reduction);

/// Splits the tree into prefixes and enumerates them with OpenMP. Returns
/// exactly what enumerate_serial() returns.
EnumerationResult enumerate_parallel(const HpSequence& seq, Dimension dim,
                                     bool symmetry_reduction);

/// enumerate_parallel() guarded by enumeration_limit(); throws
/// std::invalid_argument for longer chains.
EnumerationResult enumerate(const HpSequence& seq, Dimension dim, bool symmetry_reduction = true);

}  // namespace hpfold
