#include <doctest.h>

#include <algorithm>

#include "instances.hpp"
#include "scheme_forge/designs.hpp"
#include "scheme_forge/errors.hpp"

using namespace scheme_forge;
using namespace scheme_forge::testing;

namespace {

// Pair counts straight from the blocks, no shared code.
int blocks_with(const BlockDesign& d, Point a, Point b) {
  int k = 0;
  for (const auto& blk : d.blocks)
    if (std::find(blk.begin(), blk.end(), a) != blk.end() && std::find(blk.begin(), blk.end(), b) != blk.end())
      ++k;
  return k;
}

}  // namespace

TEST_CASE("block counts") {
  CHECK(scheme_to_design(rank_two(5)).blocks.size() == 5);
  CHECK(scheme_to_design(cyclotomic(13)).blocks.size() == 39);
  CHECK(scheme_to_design(vector_scheme(5, 2)).blocks.size() == 150);
  CHECK_THROWS_AS(scheme_to_design(rank_two(3)), NotFourEquivalenced);
}

TEST_CASE("five-point design is the point complements") {
  const BlockDesign d = scheme_to_design(rank_two(5));
  for (Point a = 0; a < 5; ++a) {
    const auto& blk = d.blocks[a];
    CHECK(std::find(blk.begin(), blk.end(), a) == blk.end());
  }
  CHECK(blocks_with(d, 0, 1) == 3);
  for (int k : pair_incidences(d)) CHECK(k == 3);
}

TEST_CASE("battery designs are 2-(n,4,3)") {
  for (const auto& inst : battery()) {
    const BlockDesign d = scheme_to_design(inst.scheme);
    CHECK(verify_design(d));
    const auto inc = pair_incidences(d);
    std::size_t idx = 0;
    for (Point a = 0; a < d.n; ++a)
      for (Point b = a + 1; b < d.n; ++b) CHECK(inc[idx++] == blocks_with(d, a, b));
  }
}

TEST_CASE("a removed block breaks the design") {
  BlockDesign d = scheme_to_design(cyclotomic(13));
  d.blocks.pop_back();
  CHECK_FALSE(verify_design(d));
}
