#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "hpfold/bench.hpp"
#include "hpfold/lattice.hpp"
#include "hpfold/rng.hpp"

namespace testutil {

inline std::shared_ptr<const hpfold::HpSequence> seq(std::string_view hp) {
  return std::make_shared<const hpfold::HpSequence>(hpfold::parse_sequence(hp));
}

inline std::shared_ptr<const hpfold::HpSequence> molecule(int id) {
  return seq(hpfold::benchmark_molecule(id).sequence);
}

inline std::string random_hp(hpfold::RngStream& rng, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(rng.uniform() < 0.5 ? 'H' : 'P');
  return s;
}

/// FNV-1a over "id:sequence:target;" for every built-in molecule.
inline std::uint64_t molecule_checksum() {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const hpfold::BenchmarkMolecule& m : hpfold::benchmark_molecules()) {
    const std::string row = std::to_string(m.id) + ":" + std::string(m.sequence) + ":" +
                            std::to_string(m.target_score) + ";";
    for (unsigned char c : row) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

// Frozen from the benchmark table the chains were copied from.
inline constexpr std::uint64_t kMoleculeChecksum = 0x7e1ea463a9addf56ull;

/// Applies a signed axis permutation to every move.
inline hpfold::Move transform(hpfold::Move m, const int (&perm)[3], const int (&flip)[3]) {
  const int axis = perm[hpfold::axis_of(m)];
  const int sign = hpfold::sign_of(m) * flip[hpfold::axis_of(m)];
  return static_cast<hpfold::Move>(axis * 2 + (sign < 0 ? 1 : 0));
}

}  // namespace testutil
