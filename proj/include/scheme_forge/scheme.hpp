#pragma once

// Association schemes on a dense color matrix: validation, intersection
// numbers, valencies and the global properties built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace scheme_forge {

using Point = int;
using Color = int;

/// Row-major n x n matrix of relation colors.
struct ColorMatrix {
  int n = 0;
  std::vector<Color> cells;

  ColorMatrix() = default;
  ColorMatrix(int n_, std::vector<Color> cells_);

  Color operator()(Point x, Point y) const { return cells[static_cast<std::size_t>(x) * n + y]; }
  Color& operator()(Point x, Point y) { return cells[static_cast<std::size_t>(x) * n + y]; }

  /// One more than the largest color present (0 for an empty matrix).
  int color_bound() const;

  friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;
};

/// Renumbers colors by first occurrence in row-major order. The diagonal
/// of a homogeneous matrix therefore becomes color 0.
ColorMatrix canonical_renumbering(const ColorMatrix& m);

/// True iff the two matrices induce the same partition of the pairs.
bool same_partition(const ColorMatrix& a, const ColorMatrix& b);

/// c(s,t,u): the number of z with color(x,z)=s and color(z,y)=t for any
/// pair (x,y) of color u.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int rank);

  int rank() const { return rank_; }
  int operator()(Color s, Color t, Color u) const { return c_[index(s, t, u)]; }
  int& at(Color s, Color t, Color u) { return c_[index(s, t, u)]; }

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t index(Color s, Color t, Color u) const {
    return (static_cast<std::size_t>(s) * rank_ + t) * rank_ + u;
  }
  int rank_ = 0;
  std::vector<int> c_;
};

/// Computes intersection numbers of a color partition with colors 0..rank-1
/// and checks, over every pair, that they are well defined. Works for
/// non-homogeneous configurations too. Throws NonConstantIntersection.
IntersectionTensor intersection_numbers(const ColorMatrix& m, int rank);

class Scheme {
 public:
  /// Checks the three scheme axioms exhaustively. Throws DiagonalViolation,
  /// DualViolation, NonConstantIntersection or InvalidScheme.
  static Scheme validate(int n, int rank, std::vector<Color> colors, std::vector<Color> dual);

  /// Derives rank and dual map from the matrix, then validates.
  static Scheme from_matrix(const ColorMatrix& m);

  /// Skips every check. Only for diagnostics that must see corrupted data.
  static Scheme unchecked(ColorMatrix m, std::vector<Color> dual, IntersectionTensor tensor);

  int n() const { return matrix_.n; }
  int rank() const { return rank_; }
  Color color(Point x, Point y) const { return matrix_(x, y); }
  Color dual(Color s) const { return dual_[s]; }
  const ColorMatrix& matrix() const { return matrix_; }
  const IntersectionTensor& tensor() const { return tensor_; }
  int c(Color s, Color t, Color u) const { return tensor_(s, t, u); }
  int valency(Color s) const { return valency_[s]; }
  std::span<const int> valencies() const { return valency_; }

  /// The row section {y : color(alpha,y) = s}, ascending.
  std::vector<Point> row(Point alpha, Color s) const;

 private:
  Scheme() = default;
  ColorMatrix matrix_;
  int rank_ = 0;
  std::vector<Color> dual_;
  IntersectionTensor tensor_;
  std::vector<int> valency_;
};

/// k when every non-diagonal valency equals k.
std::optional<int> is_k_equivalenced(const Scheme& x);

bool is_symmetric(const Scheme& x);
bool is_commutative(const Scheme& x);

/// c(s) = sum over nonzero u of c(u, u*, s). Throws DiagonalColor for s = 0.
int indistinguishing_number(const Scheme& x, Color s);
int scheme_indistinguishing(const Scheme& x);

/// k-equivalenced with c(s) = k-1 on every non-diagonal relation.
bool is_pseudocyclic(const Scheme& x);

/// Hermitian product <A_s A_t, A_u A_v> = sum_w c(s,t,w) c(u,v,w) n_w.
std::int64_t product_inner(const Scheme& x, Color s, Color t, Color u, Color v);

}  // namespace scheme_forge
