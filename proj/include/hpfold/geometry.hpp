#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hpfold {

enum class Dimension : std::uint8_t { Two = 2, Three = 3 };

inline int num_directions(Dimension d) noexcept { return d == Dimension::Two ? 4 : 6; }

/// Signed unit step along one axis. Enumerator order is the canonical
/// iteration order used everywhere (+x, -x, +y, -y, +z, -z).
enum class Move : std::uint8_t { PosX, NegX, PosY, NegY, PosZ, NegZ };

inline constexpr std::array<Move, 6> kAllMoves = {Move::PosX, Move::NegX, Move::PosY,
                                                  Move::NegY, Move::PosZ, Move::NegZ};

inline int axis_of(Move m) noexcept { return static_cast<int>(m) / 2; }
inline int sign_of(Move m) noexcept { return (static_cast<int>(m) & 1) ? -1 : 1; }

/// One-letter codes R L U D F B for the six moves.
char move_letter(Move m) noexcept;
Move move_from_letter(char c);
std::string moves_to_string(std::span<const Move> moves);
std::vector<Move> moves_from_string(std::string_view text);

struct LatticePoint {
  int x = 0;
  int y = 0;
  int z = 0;

  LatticePoint step(Move m) const noexcept {
    LatticePoint p = *this;
    int s = sign_of(m);
    switch (axis_of(m)) {
      case 0: p.x += s; break;
      case 1: p.y += s; break;
      default: p.z += s; break;
    }
    return p;
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

bool adjacent(const LatticePoint& a, const LatticePoint& b) noexcept;

}  // namespace hpfold
