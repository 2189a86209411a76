#pragma once

// Permutation groups given by generators, orbital schemes, the affine
// Frobenius constructors and automorphism-group certification.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;
inline constexpr long kDefaultMaxDegree = 1024;

/// A bijection of 0..n-1, acting on the right: (x)(a*b) = ((x)a)b.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int fixed_points() const;
  int order() const;

  /// Apply *this first, then rhs.
  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Cycles of the permutation, each starting at its least point, ordered by that point.
std::vector<std::vector<Point>> cycles(const Permutation& p);

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Breadth-first closure of the generators, cached and sorted.
  /// Throws BoundExceeded when the group has more than `bound` elements.
  const std::vector<Permutation>& enumerate(std::size_t bound = kDefaultGroupBound);

  bool has_elements() const { return elements_.has_value(); }
  /// Requires a prior enumerate().
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::optional<std::vector<Permutation>> elements_;
};

/// Orbits of the generated group on points, via the generators only.
std::vector<std::vector<Point>> point_orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

/// Orbital partition of a transitive group, colors numbered by first
/// pair in row-major order. Throws NotTransitive.
Scheme orbital_scheme(const PermGroup& g);

/// <x -> x+1, x -> gx> on Z_p, g the least element of order 4.
/// Throws BadPrime unless p is a prime congruent to 1 mod 4.
PermGroup cyclotomic_frobenius(long p);

/// Translations of (Z_p)^d together with the scalar g on Z_p^d. A vector
/// (v_0, ..., v_{d-1}) is the point sum v_k p^k.
PermGroup vector_frobenius(long p, int d, long max_degree = kDefaultMaxDegree);

/// Least element of multiplicative order exactly 4 mod p.
long order_four_unit(long p);

/// Transitive, some non-identity element fixes a point, and no
/// non-identity element fixes two.
bool frobenius_check(PermGroup& g, std::size_t bound = kDefaultGroupBound);

/// Full color-preserving automorphism group by backtracking.
PermGroup automorphism_group(const Scheme& x, std::size_t bound = kDefaultGroupBound);

/// Order-4 automorphism fixing alpha whose orbits on the other points are
/// the rows alpha*s, lexicographically least by images. `aut` must be
/// enumerated. No hypothesis on S3.
std::optional<Permutation> row_rotation(const Scheme& x, const PermGroup& aut, Point alpha);

/// row_rotation for schemes with S3 nonempty. Throws HypothesisUnmet otherwise.
std::optional<Permutation> sigma_alpha(const Scheme& x, const PermGroup& aut, Point alpha);

/// Every element fixing two or more points is the identity.
bool fixes_two_only_identity(const PermGroup& aut);

/// fixes_two_only_identity on Aut of a 4-equivalenced scheme with r >= 4.
/// Throws HypothesisUnmet outside that range.
bool two_point_rigidity(const Scheme& x, const PermGroup& aut);

struct FrobeniusCertificate {
  PermGroup group;
  std::size_t kernel_size = 0;
  std::size_t stabilizer_order = 0;
  bool orbital_match = false;
};

/// Searches Aut for a Frobenius group whose orbitals are the scheme's colors.
/// The fixed-point-free elements of Aut plus the identity are tried as a
/// kernel first; otherwise subgroups <k, h> with k fixed-point-free and h
/// an order-4 point stabilizer element are searched. `aut` must be
/// enumerated. Throws NotFourEquivalenced.
std::optional<FrobeniusCertificate> frobenius_witness(const Scheme& x, const PermGroup& aut);

/// Same, computing Aut first.
std::optional<FrobeniusCertificate> frobenius_witness(const Scheme& x,
                                                      std::size_t bound = kDefaultGroupBound);

}  // namespace scheme_forge
