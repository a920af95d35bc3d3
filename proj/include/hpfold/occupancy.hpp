#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hpfold/geometry.hpp"

namespace hpfold {

/// Open-addressing map from lattice cell to residue index.
///
/// Sized once for a chain of `capacity_hint` residues (load factor <= 1/2)
/// and never rehashed; coordinates must stay within +-kMaxCoord. Flat
/// storage keeps ChainState copies to a single allocation.
class OccupancyTable {
 public:
  static constexpr int kMaxCoord = 510;

  OccupancyTable() = default;
  explicit OccupancyTable(std::size_t capacity_hint) {
    std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, 2 * capacity_hint));
    slots_.assign(cap, Slot{});
    shift_ = 32 - std::countr_zero(cap);
  }

  static std::uint32_t pack(const LatticePoint& p) noexcept {
    return static_cast<std::uint32_t>(p.x + 512) | (static_cast<std::uint32_t>(p.y + 512) << 10) |
           (static_cast<std::uint32_t>(p.z + 512) << 20);
  }

  int find(const LatticePoint& p) const noexcept {
    const std::uint32_t key = pack(p);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = bucket(key);; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.key == key) return s.index;
      if (s.key == 0) return -1;
    }
  }

  bool contains(const LatticePoint& p) const noexcept { return find(p) >= 0; }

  /// Caller guarantees `p` is absent.
  void insert(const LatticePoint& p, int index) noexcept {
    const std::uint32_t key = pack(p);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = bucket(key);
    while (slots_[i].key != 0) i = (i + 1) & mask;
    slots_[i] = Slot{key, index};
  }

 private:
  struct Slot {
    std::uint32_t key = 0;  // 0 never packs a valid coordinate
    std::int32_t index = -1;
  };

  std::size_t bucket(std::uint32_t key) const noexcept {
    return (key * 2654435769u) >> shift_;
  }

  std::vector<Slot> slots_;
  int shift_ = 28;
};

}  // namespace hpfold
