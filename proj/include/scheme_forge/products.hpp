#pragma once

// Complex products, closed subsets and the phi/psi structure of a
// 4-equivalenced scheme.

#include <set>
#include <string>
#include <vector>

#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

using RelationSet = std::set<Color>;

/// RT = {u : c(r,t,u) != 0 for some r in R, t in T}.
RelationSet complex_product(const Scheme& x, const RelationSet& lhs, const RelationSet& rhs);

/// Least closed subset containing R (always contains 0).
RelationSet closure(const Scheme& x, const RelationSet& generators);

/// The S2/S3 split of the non-diagonal relations and the maps phi, psi.
/// phi and psi are total: identity on 0 and on S2.
struct PhiPsi {
  std::vector<Color> phi;
  std::vector<Color> psi;
  RelationSet s2;
  RelationSet s3;

  bool in_s2(Color s) const { return s2.count(s) != 0; }
  bool in_s3(Color s) const { return s3.count(s) != 0; }
};

/// Classifies each s by s*s = 4*1 + 3s (S2) or 4*1 + 2u + v (S3, phi = u,
/// psi = v). Throws NotFourEquivalenced or DichotomyViolation.
PhiPsi phi_psi(const Scheme& x);

enum class ProductClass { FourDistinct, TwoPlusDouble, TwoTwo };

const char* to_string(ProductClass c);

/// Decomposition type of s*t for distinct non-diagonal s, t, cross-checked
/// against the phi criterion. Throws TrichotomyViolation on disagreement.
ProductClass product_class(const Scheme& x, const PhiPsi& pp, Color s, Color t);

/// s wr t: neither relation lies in the closure of the other.
bool wr(const Scheme& x, Color s, Color t);

struct LemmaFinding {
  std::string check;
  std::string detail;
};

/// Outcome of the exhaustive structural checks. `checked` counts the
/// instances examined per check so vacuous passes are visible.
struct LemmaReport {
  struct Tally {
    std::string check;
    long checked = 0;
  };
  std::vector<Tally> tallies;
  std::vector<LemmaFinding> findings;

  bool ok() const { return findings.empty(); }
  long checked(const std::string& check) const;
};

// Check names used in LemmaReport.
inline constexpr const char* kCheckTensor = "tensor-identities";
inline constexpr const char* kCheckSquare = "square-dichotomy";
inline constexpr const char* kCheckProduct = "product-trichotomy";
inline constexpr const char* kCheckPhiBijection = "phi-psi-bijection";
inline constexpr const char* kCheckFourProduct = "four-term-product-exists";
inline constexpr const char* kCheckWreathProduct = "wr-product-four-distinct";
inline constexpr const char* kCheckWreathIntersection = "wr-s3-intersection";

/// Runs every structural check over all colors and returns the findings
/// instead of throwing. Throws NotFourEquivalenced only.
LemmaReport verify_structure_lemmas(const Scheme& x);

}  // namespace scheme_forge
