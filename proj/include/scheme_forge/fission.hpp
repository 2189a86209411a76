#pragma once

// Fissions of a scheme by individualizing points, stabilized by
// two-dimensional Weisfeiler-Leman refinement.

#include <optional>
#include <span>
#include <vector>

#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

inline constexpr int kDefaultBaseCutoff = 3;

/// Possibly non-homogeneous coherent configuration. Colors are numbered by
/// first occurrence in row-major order.
struct CoherentConfiguration {
  ColorMatrix matrix;
  int num_colors = 0;
  /// Supports of the diagonal colors, ordered by least point.
  std::vector<std::vector<Point>> fibers;

  int n() const { return matrix.n; }
  Color color(Point x, Point y) const { return matrix(x, y); }
};

/// Coarsest refinement of `seed` (plus the diagonal) that is stable under
/// recoloring each pair by its color and the multiset of color pairs over
/// all intermediate points.
CoherentConfiguration wl_stabilize(const ColorMatrix& seed);

/// The scheme's colors split by individualizing every point of `delta`, stabilized.
CoherentConfiguration point_fission(const Scheme& x, std::span<const Point> delta);

/// Every ordered pair carries its own color.
bool is_complete(const CoherentConfiguration& cc);

/// Every basis relation between fibers avoiding alpha has out-degree at
/// most one. Throws NotAFiber unless {alpha} is a fiber.
bool is_semiregular_off(const CoherentConfiguration& cc, Point alpha);

/// Each fiber lies inside a single row alpha*u of the scheme.
bool fibers_within_rows(const Scheme& x, const CoherentConfiguration& cc, Point alpha);

struct FissionReport {
  std::vector<Point> distinguished;
  int num_colors = 0;
  int num_fibers = 0;
  /// alpha when the fission is by {alpha} alone and semiregular off alpha.
  std::optional<Point> semiregular_off;
  bool complete = false;
};

FissionReport fission_report(const Scheme& x, std::span<const Point> delta);

struct BaseResult {
  int size = 0;
  std::vector<Point> witness;
};

/// Smallest Delta with a complete fission, |Delta| <= cutoff. A pair
/// (alpha, beta) with color in S2 is tried before the lexicographic pairs.
/// Throws CutoffExceeded.
BaseResult base_number(const Scheme& x, int cutoff = kDefaultBaseCutoff);

}  // namespace scheme_forge
