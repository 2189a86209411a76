#include <doctest.h>

#include "instances.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/products.hpp"

using namespace scheme_forge;
using namespace scheme_forge::testing;

TEST_CASE("complex products") {
  const Scheme z13 = cyclotomic(13);
  const Color c0 = kZ13ClassOf1;
  CHECK(complex_product(z13, {0}, {c0}) == RelationSet{c0});
  CHECK(complex_product(z13, {c0}, {c0}) == RelationSet{0, kZ13ClassOf2, kZ13ClassOf4});
}

TEST_CASE("closures") {
  CHECK(closure(rank_two(5), {0}) == RelationSet{0});
  CHECK(closure(rank_two(5), {1}) == RelationSet{0, 1});
  const Scheme z13 = cyclotomic(13);
  CHECK(closure(z13, {kZ13ClassOf1}) == RelationSet{0, 1, 2, 3});
  const Scheme v25 = vector_scheme(5, 2);
  for (Color s = 1; s < v25.rank(); ++s) CHECK(closure(v25, {s}) == RelationSet{0, s});
}

TEST_CASE("square dichotomy") {
  const PhiPsi five = phi_psi(rank_two(5));
  CHECK(five.s2 == RelationSet{1});
  CHECK(five.s3.empty());

  const PhiPsi z13 = phi_psi(cyclotomic(13));
  CHECK(z13.s2.empty());
  CHECK(z13.s3 == RelationSet{1, 2, 3});
  CHECK(z13.phi[kZ13ClassOf1] == kZ13ClassOf4);
  CHECK(z13.psi[kZ13ClassOf1] == kZ13ClassOf2);
  CHECK(z13.phi[0] == 0);

  const PhiPsi v25 = phi_psi(vector_scheme(5, 2));
  CHECK(v25.s2.size() == 6);
  CHECK(v25.s3.empty());

  CHECK_THROWS_AS(phi_psi(rank_two(3)), NotFourEquivalenced);
}

TEST_CASE("phi and psi on S3") {
  for (long p : {13L, 17L, 29L}) {
    const PhiPsi pp = phi_psi(cyclotomic(p));
    for (Color s : pp.s3) {
      CHECK(pp.in_s3(pp.phi[s]));
      CHECK(pp.psi[s] == pp.phi[pp.phi[s]]);
    }
  }
}

TEST_CASE("product trichotomy agrees with the phi criterion") {
  for (const auto& inst : battery()) {
    const Scheme& x = inst.scheme;
    const PhiPsi pp = phi_psi(x);
    for (Color s = 1; s < x.rank(); ++s)
      for (Color t = 1; t < x.rank(); ++t) {
        if (s == t) continue;
        const ProductClass k = product_class(x, pp, s, t);
        const bool st = pp.in_s3(t) && s == pp.phi[t];
        const bool ts = pp.in_s3(s) && t == pp.phi[s];
        if (!st && !ts) CHECK(k == ProductClass::FourDistinct);
        else if (st && ts) CHECK(k == ProductClass::TwoTwo);
        else CHECK(k == ProductClass::TwoPlusDouble);
      }
  }
}

TEST_CASE("wreath relation") {
  const Scheme z13 = cyclotomic(13);
  CHECK_FALSE(wr(z13, 1, 1));
  CHECK_FALSE(wr(z13, kZ13ClassOf1, kZ13ClassOf2));
  const Scheme v25 = vector_scheme(5, 2);
  CHECK(wr(v25, 1, 2));
  CHECK_FALSE(wr(v25, 3, 3));
  for (Color s = 1; s < v25.rank(); ++s)
    for (Color t = 1; t < v25.rank(); ++t)
      if (s != t) CHECK(complex_product(v25, {s}, {t}).size() == 4);
}

TEST_CASE("structure lemmas on generated schemes") {
  for (const auto& inst : battery()) {
    CAPTURE(inst.name);
    const LemmaReport rep = verify_structure_lemmas(inst.scheme);
    CHECK(rep.ok());
  }
  const LemmaReport z13 = verify_structure_lemmas(cyclotomic(13));
  CHECK(z13.checked(kCheckWreathProduct) == 0);
  const LemmaReport v25 = verify_structure_lemmas(vector_scheme(5, 2));
  CHECK(v25.checked(kCheckWreathProduct) > 0);
}

TEST_CASE("a bumped tensor entry is caught") {
  const Scheme z13 = cyclotomic(13);
  IntersectionTensor bad = z13.tensor();
  bad.at(kZ13ClassOf1, kZ13ClassOf1, kZ13ClassOf2) += 1;
  std::vector<Color> dual(z13.rank());
  for (Color s = 0; s < z13.rank(); ++s) dual[s] = z13.dual(s);
  const Scheme corrupt = Scheme::unchecked(z13.matrix(), dual, bad);
  LemmaReport rep;
  CHECK_NOTHROW(rep = verify_structure_lemmas(corrupt));
  CHECK_FALSE(rep.ok());
}
