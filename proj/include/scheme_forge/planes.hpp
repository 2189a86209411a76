#pragma once

// s-lines and extended s-planes: lattice-indexed point families around a
// base point, built by uniqueness-driven constraint propagation.

#include <optional>
#include <utility>
#include <vector>

#include "scheme_forge/groups.hpp"
#include "scheme_forge/products.hpp"
#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

inline constexpr int kDefaultPlaneRadius = 3;

struct LatticeCell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const LatticeCell&, const LatticeCell&) = default;
};

/// The quarter turn (i,j) -> (-j,i) of the lattice.
struct RotationAction {
  static constexpr LatticeCell apply(LatticeCell c) { return {-c.j, c.i}; }
  static constexpr LatticeCell apply(LatticeCell c, int times) {
    for (int k = 0; k < ((times % 4) + 4) % 4; ++k) c = apply(c);
    return c;
  }
};

/// The base (alpha, beta, gamma, delta, epsilon): cells (0,0), (1,0),
/// (0,1), (-1,0), (0,-1).
struct PlaneBase {
  Point alpha = 0, beta = 0, gamma = 0, delta = 0, epsilon = 0;
  friend auto operator<=>(const PlaneBase&, const PlaneBase&) = default;
};

/// How the column axis is grown: the s-line through (alpha, gamma), the
/// column analogue of the row axis through (alpha, beta).
inline constexpr const char* kColumnAxisReading =
    "column axis (0,i), i>=2, continues the s-line through alpha and gamma";

class Plane {
 public:
  Plane(Color s, PlaneBase base, int radius, bool cross);

  Color s() const { return s_; }
  const PlaneBase& base() const { return base_; }
  int radius() const { return radius_; }
  /// Relations in S2 give the five-cell cross; S3 gives the square window.
  bool is_cross() const { return cross_; }

  bool contains(LatticeCell c) const;
  /// Point at a window cell; -1 while unfilled.
  Point at(LatticeCell c) const { return grid_[slot(c)]; }
  void set(LatticeCell c, Point p) { grid_[slot(c)] = p; }
  /// Window cells in row-major order of (i, j).
  std::vector<LatticeCell> cells() const;

 private:
  std::size_t slot(LatticeCell c) const {
    return static_cast<std::size_t>(c.i + radius_) * (2 * radius_ + 1) + (c.j + radius_);
  }
  Color s_;
  PlaneBase base_;
  int radius_;
  bool cross_;
  std::vector<Point> grid_;
};

/// Extends (x0, x1) to `length` points, each next point the unique y with
/// color(x_k, y) = s and color(x_{k-1}, y) = psi(s). Requires s in S3.
std::vector<Point> s_line(const Scheme& x, const PhiPsi& pp, Color s, Point x0, Point x1,
                          int length);

/// Throws PlaneError (InvalidBase, NoExtension, AmbiguousExtension).
Plane build_plane(const Scheme& x, const PhiPsi& pp, Color s, const PlaneBase& base,
                  int radius = kDefaultPlaneRadius);

/// color(alpha, cell) is constant on every quarter-turn orbit of cells.
bool check_rotation_invariance(const Scheme& x, const Plane& plane);

/// Relations between the two planes' points are invariant under rotating
/// both cells by a quarter turn. Throws BaseMismatch.
bool check_sim(const Scheme& x, Point alpha, const Plane& plane_s, const Plane& plane_t);

/// All bases at alpha for s: four distinct points of alpha*s with
/// color(beta,delta) = color(gamma,epsilon) = psi(s). Lexicographic order.
std::vector<PlaneBase> valid_bases(const Scheme& x, const PhiPsi& pp, Color s, Point alpha);

/// The base (alpha, beta, sigma(beta), sigma^2(beta), sigma^3(beta)).
PlaneBase rotation_base(const Permutation& sigma, Point alpha, Point beta);

/// Searches all base pairs at alpha for planes witnessing s ~ t.
std::optional<std::pair<Plane, Plane>> find_sim_pair(const Scheme& x, const PhiPsi& pp,
                                                     Point alpha, Color s, Color t,
                                                     int radius = kDefaultPlaneRadius);

/// sigma(plane(c)) = plane(rotate(c)) on every window cell.
bool rotation_matches(const Plane& plane, const Permutation& sigma);

}  // namespace scheme_forge
