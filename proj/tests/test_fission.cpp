#include <doctest.h>

#include <numeric>

#include "instances.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/fission.hpp"
#include "scheme_forge/products.hpp"

using namespace scheme_forge;
using namespace scheme_forge::testing;

TEST_CASE("a scheme is already stable") {
  for (const auto& inst : battery()) {
    const CoherentConfiguration cc = wl_stabilize(inst.scheme.matrix());
    CHECK(cc.num_colors == inst.scheme.rank());
    CHECK(same_partition(cc.matrix, inst.scheme.matrix()));
    CHECK(cc.fibers.size() == 1);
  }
}

TEST_CASE("stabilization is idempotent and refines the seed") {
  const Scheme z13 = cyclotomic(13);
  ColorMatrix seed = z13.matrix();
  seed(0, 1) = 9;  // break the scheme on one pair
  const CoherentConfiguration once = wl_stabilize(seed);
  const CoherentConfiguration twice = wl_stabilize(once.matrix);
  CHECK(once.matrix == twice.matrix);
  for (int x = 0; x < 13; ++x)
    for (int y = 0; y < 13; ++y)
      for (int a = 0; a < 13; ++a)
        for (int b = 0; b < 13; ++b)
          if (once.color(x, y) == once.color(a, b)) CHECK(seed(x, y) == seed(a, b));
}

TEST_CASE("discrete seeds stay discrete") {
  std::vector<Color> cells(16);
  std::iota(cells.begin(), cells.end(), 0);
  const CoherentConfiguration cc = wl_stabilize(ColorMatrix(4, cells));
  CHECK(is_complete(cc));
  CHECK(cc.num_colors == 16);
  CHECK(cc.fibers.size() == 4);
}

TEST_CASE("point fission of Z13") {
  const Scheme z13 = cyclotomic(13);
  const Point alpha[] = {0};
  const CoherentConfiguration cc = point_fission(z13, alpha);
  REQUIRE(cc.fibers.size() == 4);
  CHECK(cc.fibers[0] == std::vector<Point>{0});
  CHECK(cc.fibers[1] == z13.row(0, kZ13ClassOf1));
  CHECK(cc.fibers[2] == z13.row(0, kZ13ClassOf2));
  CHECK(cc.fibers[3] == z13.row(0, kZ13ClassOf4));
  CHECK(is_semiregular_off(cc, 0));
  CHECK(fibers_within_rows(z13, cc, 0));
  CHECK_THROWS_AS(is_semiregular_off(cc, 1), NotAFiber);
}

TEST_CASE("semiregular off every alpha") {
  for (long p : {13L, 17L}) {
    const Scheme x = cyclotomic(p);
    for (Point a = 0; a < x.n(); ++a) {
      const Point d[] = {a};
      const CoherentConfiguration cc = point_fission(x, d);
      CHECK(is_semiregular_off(cc, a));
      CHECK(fibers_within_rows(x, cc, a));
    }
  }
}

TEST_CASE("fission is monotone in the individualized set") {
  const Scheme z17 = cyclotomic(17);
  const Point small[] = {0};
  const Point large[] = {0, 3};
  const CoherentConfiguration a = point_fission(z17, small);
  const CoherentConfiguration b = point_fission(z17, large);
  CHECK(b.num_colors >= a.num_colors);
  for (int x = 0; x < 17; ++x)
    for (int y = 0; y < 17; ++y)
      for (int u = 0; u < 17; ++u)
        for (int v = 0; v < 17; ++v)
          if (b.color(x, y) == b.color(u, v)) CHECK(a.color(x, y) == a.color(u, v));
}

TEST_CASE("individualizing everything is complete") {
  const Scheme z13 = cyclotomic(13);
  std::vector<Point> all(13);
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_complete(point_fission(z13, all)));
}

TEST_CASE("base numbers") {
  const Scheme v25 = vector_scheme(5, 2);
  const PhiPsi pp = phi_psi(v25);
  const BaseResult b = base_number(v25);
  CHECK(b.size == 2);
  REQUIRE(b.witness.size() == 2);
  CHECK(pp.in_s2(v25.color(b.witness[0], b.witness[1])));

  const Point pair[] = {0, v25.row(0, 1).front()};
  CHECK(is_complete(point_fission(v25, pair)));

  CHECK_THROWS_AS(base_number(rank_two(5), 3), CutoffExceeded);
  CHECK(base_number(rank_two(5), 4).size == 4);
  CHECK(base_number(cyclotomic(13)).size == 2);
}

TEST_CASE("fission report") {
  const Scheme z13 = cyclotomic(13);
  const Point alpha[] = {0};
  const FissionReport rep = fission_report(z13, alpha);
  CHECK(rep.num_fibers == 4);
  CHECK(rep.semiregular_off == 0);
  CHECK_FALSE(rep.complete);
}
