#pragma once

#include <array>
#include <vector>

#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

/// Blocks are kept as a multiset; each block is sorted.
struct BlockDesign {
  int n = 0;
  std::vector<std::array<Point, 4>> blocks;
};

/// One block alpha*s per point alpha and non-diagonal s. Throws NotFourEquivalenced.
BlockDesign scheme_to_design(const Scheme& x);

/// Number of blocks containing both x and y, for every x < y (row-major, upper triangle).
std::vector<int> pair_incidences(const BlockDesign& d);

/// Every pair of distinct points lies in exactly lambda blocks. Only
/// t = 2 and block size 4 are supported.
bool verify_design(const BlockDesign& d, int t = 2, int k = 4, int lambda = 3);

}  // namespace scheme_forge
