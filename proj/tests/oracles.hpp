#pragma once

#include <cstdlib>
#include <vector>

#include "ribbon/knot.hpp"

namespace ribbon::oracle {

// Gauss code of a braid closure, following the strand that starts at position 0.
// Generator ±i crosses positions i-1 and i; the left strand is over when positive.
inline std::vector<GaussEntry> braid_gauss(const std::vector<int>& word) {
  std::vector<GaussEntry> code;
  int pos = 0;
  do {
    for (std::size_t c = 0; c < word.size(); ++c) {
      const int g = word[c], i = std::abs(g) - 1;
      if (pos != i && pos != i + 1) continue;
      const bool left = pos == i;
      code.push_back({static_cast<int>(c), g > 0 ? left : !left, g > 0 ? 1 : -1});
      pos = left ? i + 1 : i;
    }
  } while (pos != 0);
  return code;
}

// (σ1 σ2 ... σ_{q-1})^p closes to the (p,q) torus knot.
inline std::vector<int> torus_braid(int p, int q) {
  std::vector<int> w;
  for (int r = 0; r < p; ++r)
    for (int i = 1; i < q; ++i) w.push_back(i);
  return w;
}

// 7_4 as the closure of a four-strand braid, as listed in standard knot tables.
inline const std::vector<int> kSevenFourBraid = {1, 1, 2, -1, 2, 2, 3, -2, 3};

}  // namespace ribbon::oracle
