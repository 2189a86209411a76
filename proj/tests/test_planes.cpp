#include <doctest.h>

#include "instances.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/planes.hpp"

using namespace scheme_forge;
using namespace scheme_forge::testing;

TEST_CASE("quarter turn on lattice cells") {
  CHECK(RotationAction::apply({1, 0}) == LatticeCell{0, 1});
  CHECK(RotationAction::apply({2, 3}, 4) == LatticeCell{2, 3});
  CHECK(RotationAction::apply({2, 3}, -1) == LatticeCell{3, -2});
}

TEST_CASE("s-lines") {
  const Scheme z13 = cyclotomic(13);
  const PhiPsi pp = phi_psi(z13);
  const Color s = kZ13ClassOf1;
  CHECK(s_line(z13, pp, s, 0, 1, 2) == std::vector<Point>{0, 1});

  const auto line = s_line(z13, pp, s, 0, 1, 3);
  REQUIRE(line.size() == 3);
  const Point y = line[2];
  CHECK(z13.color(1, y) == s);
  CHECK(z13.color(0, y) == pp.psi[s]);
  int candidates = 0;
  for (Point z = 0; z < 13; ++z)
    if (z13.color(1, z) == s && z13.color(0, z) == pp.psi[s]) ++candidates;
  CHECK(candidates == 1);

  const Scheme v25 = vector_scheme(5, 2);
  CHECK_THROWS_AS(s_line(v25, phi_psi(v25), 1, 0, v25.row(0, 1).front(), 3), HypothesisUnmet);
}

TEST_CASE("valid bases") {
  const Scheme z13 = cyclotomic(13);
  const PhiPsi pp = phi_psi(z13);
  for (Color s : pp.s3) CHECK(valid_bases(z13, pp, s, 0).size() == 8);
  const Scheme v25 = vector_scheme(5, 2);
  const PhiPsi vp = phi_psi(v25);
  for (Color s : vp.s2) CHECK(valid_bases(v25, vp, s, 0).size() == 24);
}

TEST_CASE("planes on cyclotomic Z13") {
  const Scheme z13 = cyclotomic(13);
  const PhiPsi pp = phi_psi(z13);
  for (Color s : pp.s3) {
    for (const PlaneBase& b : valid_bases(z13, pp, s, 0)) {
      const Plane plane = build_plane(z13, pp, s, b, 3);
      CHECK_FALSE(plane.is_cross());
      CHECK(plane.cells().size() == 49);
      CHECK(plane.at({0, 0}) == 0);
      CHECK(plane.at({1, 0}) == b.beta);
      CHECK(plane.at({0, -1}) == b.epsilon);
      for (const LatticeCell& c : plane.cells()) CHECK(plane.at(c) >= 0);
      CHECK(check_rotation_invariance(z13, plane));
      CHECK(check_sim(z13, 0, plane, plane));
    }
  }
}

TEST_CASE("crosses for S2 relations") {
  const Scheme v25 = vector_scheme(5, 2);
  const PhiPsi pp = phi_psi(v25);
  const Color s = 1;
  const PlaneBase b = valid_bases(v25, pp, s, 0).front();
  const Plane cross = build_plane(v25, pp, s, b, 3);
  CHECK(cross.is_cross());
  CHECK(cross.cells().size() == 5);
  for (const LatticeCell& c : cross.cells())
    if (c != LatticeCell{0, 0}) CHECK(v25.color(0, cross.at(c)) == s);
  CHECK(check_rotation_invariance(v25, cross));
}

TEST_CASE("invalid bases are rejected") {
  const Scheme z13 = cyclotomic(13);
  const PhiPsi pp = phi_psi(z13);
  const Color s = kZ13ClassOf1;
  PlaneBase b = valid_bases(z13, pp, s, 0).front();
  std::swap(b.gamma, b.delta);
  try {
    build_plane(z13, pp, s, b, 3);
    FAIL("expected PlaneError");
  } catch (const PlaneError& e) {
    CHECK(e.kind == PlaneError::Kind::InvalidBase);
  }
}

TEST_CASE("a swapped cell breaks rotation invariance") {
  const Scheme z13 = cyclotomic(13);
  const PhiPsi pp = phi_psi(z13);
  const Color s = kZ13ClassOf1;
  Plane plane = build_plane(z13, pp, s, valid_bases(z13, pp, s, 0).front(), 3);
  const Point far = plane.at({2, 1});
  // Swap in a point whose relation to alpha differs from the cell's orbit.
  for (Point z = 1; z < 13; ++z) {
    if (z13.color(0, z) != z13.color(0, far)) {
      plane.set({2, 1}, z);
      break;
    }
  }
  CHECK_FALSE(check_rotation_invariance(z13, plane));
}

TEST_CASE("planes follow sigma") {
  for (long p : {13L, 17L}) {
    const Scheme x = cyclotomic(p);
    const PhiPsi pp = phi_psi(x);
    const PermGroup aut = automorphism_group(x);
    const Permutation sigma = *sigma_alpha(x, aut, 0);
    for (Color s : pp.s3) {
      for (Point beta : x.row(0, s)) {
        const Plane plane = build_plane(x, pp, s, rotation_base(sigma, 0, beta), 3);
        CHECK(rotation_matches(plane, sigma));
      }
    }
  }
}

TEST_CASE("sim pairs on wreath pairs") {
  const Scheme v25 = vector_scheme(5, 2);
  const PhiPsi pp = phi_psi(v25);
  const auto pair = find_sim_pair(v25, pp, 0, 1, 2, 3);
  REQUIRE(pair.has_value());
  CHECK(check_sim(v25, 0, pair->first, pair->second));
}
