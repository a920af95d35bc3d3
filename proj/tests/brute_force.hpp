#pragma once

// Test-only oracle: tries every direction string of length n-1 and scores
// the self-avoiding ones with an explicit pairwise count. Shares nothing
// with the library beyond the sequence type.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "hpfold/lattice.hpp"

namespace brute {

struct Result {
  int optimum = -1;           // over complete chains and trapped chains
  int complete_optimum = -1;  // complete chains only
  std::uint64_t complete_count = 0;
};

inline int pair_contacts(const std::string& hp, const std::vector<std::array<int, 3>>& pts) {
  int c = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 2; j < pts.size(); ++j) {
      if (hp[i] != 'H' || hp[j] != 'H') continue;
      int d = std::abs(pts[i][0] - pts[j][0]) + std::abs(pts[i][1] - pts[j][1]) +
              std::abs(pts[i][2] - pts[j][2]);
      if (d == 1) ++c;
    }
  return c;
}

inline Result solve(const std::string& hp, int dim) {
  static const int kDelta[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  const int dirs = 2 * dim;
  const std::size_t steps = hp.size() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < steps; ++i) total *= static_cast<std::uint64_t>(dirs);

  Result r;
  if (steps == 0) return {0, 0, 1};
  std::vector<int> code(steps, 0);
  for (std::uint64_t id = 0; id < total; ++id) {
    std::uint64_t v = id;
    for (std::size_t i = 0; i < steps; ++i) {
      code[i] = static_cast<int>(v % static_cast<std::uint64_t>(dirs));
      v /= static_cast<std::uint64_t>(dirs);
    }
    std::vector<std::array<int, 3>> pts{{0, 0, 0}};
    bool valid = true;
    for (std::size_t i = 0; i < steps && valid; ++i) {
      // Before stepping, a head with no free neighbour is a trapped chain.
      auto occupied = [&](const std::array<int, 3>& p) {
        return std::find(pts.begin(), pts.end(), p) != pts.end();
      };
      bool free_neighbour = false;
      for (int d = 0; d < dirs; ++d) {
        std::array<int, 3> q = pts.back();
        for (int a = 0; a < 3; ++a) q[a] += kDelta[d][a];
        free_neighbour = free_neighbour || !occupied(q);
      }
      if (!free_neighbour) {
        r.optimum = std::max(r.optimum, pair_contacts(hp, pts));
        valid = false;
        break;
      }
      std::array<int, 3> next = pts.back();
      for (int a = 0; a < 3; ++a) next[a] += kDelta[code[i]][a];
      if (occupied(next)) {
        valid = false;
        break;
      }
      pts.push_back(next);
    }
    if (!valid) continue;
    ++r.complete_count;
    const int c = pair_contacts(hp, pts);
    r.complete_optimum = std::max(r.complete_optimum, c);
    r.optimum = std::max(r.optimum, c);
  }
  return r;
}

}  // namespace brute
