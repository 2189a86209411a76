#include <doctest.h>

#include <algorithm>

#include "instances.hpp"
#include "oracles.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/groups.hpp"

using namespace scheme_forge;
using namespace scheme_forge::testing;

namespace {

Permutation affine(long p, long a, long b) {
  std::vector<Point> img(p);
  for (long x = 0; x < p; ++x) img[x] = static_cast<Point>((a * x + b) % p);
  return Permutation(img);
}

}  // namespace

TEST_CASE("permutations act on the right") {
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  // a then b: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1.
  CHECK((a * b)(0) == 0);
  CHECK((a * b)(1) == 2);
  CHECK((a * b)(2) == 1);
  CHECK(a.order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("group enumeration") {
  CHECK(PermGroup(4, {Permutation::identity(4)}).enumerate().size() == 1);
  CHECK(PermGroup(2, {Permutation({1, 0})}).enumerate().size() == 2);
  PermGroup g(13, {affine(13, 1, 1), affine(13, 5, 0)});
  CHECK(g.enumerate().size() == 52);
  PermGroup big(13, {affine(13, 1, 1), affine(13, 5, 0)});
  CHECK_THROWS_AS(big.enumerate(10), BoundExceeded);
}

TEST_CASE("orbital schemes") {
  const Scheme five = orbital_scheme(cyclotomic_frobenius(5));
  CHECK(five.rank() == 2);
  CHECK(five.n() == 5);

  const Scheme z13 = cyclotomic(13);
  CHECK(z13.rank() == 4);
  CHECK(z13.row(0, kZ13ClassOf1) == std::vector<Point>{1, 5, 8, 12});
  CHECK(z13.row(0, kZ13ClassOf2) == std::vector<Point>{2, 3, 10, 11});
  CHECK(z13.row(0, kZ13ClassOf4) == std::vector<Point>{4, 6, 7, 9});

  const PermGroup sym3(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
  CHECK(orbital_scheme(sym3).rank() == 2);

  CHECK_THROWS_AS(orbital_scheme(PermGroup(4, {Permutation({1, 0, 2, 3})})), NotTransitive);
}

TEST_CASE("orbitals agree with explicit element orbits") {
  for (long p : {5L, 13L, 17L}) {
    PermGroup g = cyclotomic_frobenius(p);
    const auto& els = g.enumerate();
    const Scheme x = orbital_scheme(g);
    CHECK(same_partition(x.matrix(), oracle::orbital_partition(x.n(), els)));
  }
}

TEST_CASE("Frobenius constructors") {
  CHECK(order_four_unit(13) == 5);
  CHECK(order_four_unit(17) == 4);
  CHECK(order_four_unit(29) == 12);
  CHECK(order_four_unit(5) == 2);
  PermGroup z13 = cyclotomic_frobenius(13);
  CHECK(z13.degree() == 13);
  CHECK(z13.enumerate().size() == 52);
  PermGroup z17 = cyclotomic_frobenius(17);
  CHECK(z17.enumerate().size() == 68);
  CHECK_THROWS_AS(cyclotomic_frobenius(7), BadPrime);
  CHECK_THROWS_AS(cyclotomic_frobenius(15), BadPrime);

  PermGroup v5 = vector_frobenius(5, 1);
  CHECK(v5.enumerate().size() == 20);
  PermGroup v25 = vector_frobenius(5, 2);
  CHECK(v25.degree() == 25);
  CHECK(v25.enumerate().size() == 100);
  CHECK(orbital_scheme(v25).rank() == 7);
  const PermGroup v169 = vector_frobenius(13, 2);
  CHECK(v169.degree() == 169);
  CHECK(orbital_scheme(v169).rank() == 43);
  CHECK_THROWS_AS(vector_frobenius(13, 3), DegreeTooLarge);
}

TEST_CASE("Frobenius check") {
  PermGroup z13 = cyclotomic_frobenius(13);
  CHECK(frobenius_check(z13));
  PermGroup regular(13, {affine(13, 1, 1)});
  CHECK_FALSE(frobenius_check(regular));
  PermGroup sym3(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
  CHECK(frobenius_check(sym3));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(rank_two(5)).order() == 120);
  CHECK(automorphism_group(cyclotomic(13)).order() == 52);
  CHECK(automorphism_group(cyclotomic(17)).order() == 68);
}

TEST_CASE("automorphism count confirmed by permutation filter") {
  CHECK(oracle::automorphism_count(rank_two(5).matrix()) == 120);
  CHECK(oracle::automorphism_count(cyclotomic(13).matrix()) == 52);
  CHECK(oracle::automorphism_count(cyclotomic(17).matrix()) == 68);
}

TEST_CASE("sigma_alpha") {
  const Scheme z13 = cyclotomic(13);
  const PermGroup aut13 = automorphism_group(z13);
  const auto s13 = sigma_alpha(z13, aut13, 0);
  REQUIRE(s13.has_value());
  CHECK(*s13 == affine(13, 5, 0));

  const Scheme z29 = cyclotomic(29);
  const PermGroup aut29 = automorphism_group(z29);
  const auto s29 = sigma_alpha(z29, aut29, 0);
  REQUIRE(s29.has_value());
  CHECK(*s29 == affine(29, 12, 0));

  const Scheme five = rank_two(5);
  CHECK_THROWS_AS(sigma_alpha(five, automorphism_group(five), 0), HypothesisUnmet);
}

TEST_CASE("two-point rigidity") {
  for (long p : {13L, 17L, 29L}) {
    const Scheme x = cyclotomic(p);
    CHECK(two_point_rigidity(x, automorphism_group(x)));
  }
  const Scheme five = rank_two(5);
  const PermGroup sym5 = automorphism_group(five);
  CHECK_FALSE(fixes_two_only_identity(sym5));
  CHECK_THROWS_AS(two_point_rigidity(five, sym5), HypothesisUnmet);
}

TEST_CASE("Frobenius witnesses") {
  const auto five = frobenius_witness(rank_two(5));
  REQUIRE(five.has_value());
  CHECK(five->group.order() == 20);
  CHECK(five->orbital_match);

  const auto z13 = frobenius_witness(cyclotomic(13));
  REQUIRE(z13.has_value());
  CHECK(z13->kernel_size == 13);
  CHECK(z13->stabilizer_order == 4);

  const auto v25 = frobenius_witness(vector_scheme(5, 2));
  REQUIRE(v25.has_value());
  CHECK(v25->kernel_size == 25);
}
