#include "scheme_forge/scheme.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "scheme_forge/errors.hpp"

namespace scheme_forge {

ColorMatrix::ColorMatrix(int n_, std::vector<Color> cells_) : n(n_), cells(std::move(cells_)) {
  if (n < 0 || cells.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidScheme("color matrix size does not match n");
  }
}

int ColorMatrix::color_bound() const {
  if (cells.empty()) return 0;
  return *std::max_element(cells.begin(), cells.end()) + 1;
}

ColorMatrix canonical_renumbering(const ColorMatrix& m) {
  std::unordered_map<Color, Color> relabel;
  ColorMatrix out = m;
  for (auto& c : out.cells) {
    auto [it, fresh] = relabel.try_emplace(c, static_cast<Color>(relabel.size()));
    c = it->second;
  }
  return out;
}

bool same_partition(const ColorMatrix& a, const ColorMatrix& b) {
  return a.n == b.n && canonical_renumbering(a) == canonical_renumbering(b);
}

IntersectionTensor::IntersectionTensor(int rank)
    : rank_(rank), c_(static_cast<std::size_t>(rank) * rank * rank, 0) {}

IntersectionTensor intersection_numbers(const ColorMatrix& m, int rank) {
  const int n = m.n;
  IntersectionTensor tensor(rank);

  // Witness pair for each color: its first occurrence in row-major order.
  std::vector<int> witness(rank, -1);
  for (int i = 0; i < n * n; ++i) {
    const Color u = m.cells[i];
    if (witness[u] < 0) witness[u] = i;
  }

  // Number of nonzero (s,t) entries per u, used to compare a pair's tally in O(n).
  std::vector<int> support(rank, 0);
  for (Color u = 0; u < rank; ++u) {
    if (witness[u] < 0) continue;
    const int x = witness[u] / n, y = witness[u] % n;
    for (int z = 0; z < n; ++z) {
      int& entry = tensor.at(m(x, z), m(z, y), u);
      if (entry++ == 0) ++support[u];
    }
  }

  std::vector<int> tally(static_cast<std::size_t>(rank) * rank, 0);
  std::vector<int> touched;
  touched.reserve(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Color u = m(x, y);
      if (witness[u] == x * n + y) continue;
      touched.clear();
      for (int z = 0; z < n; ++z) {
        const int key = m(x, z) * rank + m(z, y);
        if (tally[key]++ == 0) touched.push_back(key);
      }
      std::optional<NonConstantIntersection> failure;
      for (int key : touched) {
        const int s = key / rank, t = key % rank;
        if (!failure && tally[key] != tensor(s, t, u)) {
          failure.emplace(s, t, u, x, y, tensor(s, t, u), tally[key]);
        }
      }
      if (!failure && static_cast<int>(touched.size()) != support[u]) {
        // Some (s,t) present at the witness is absent here.
        const int wx = witness[u] / n, wy = witness[u] % n;
        for (int z = 0; z < n && !failure; ++z) {
          const Color s = m(wx, z), t = m(z, wy);
          if (tally[s * rank + t] == 0) failure.emplace(s, t, u, x, y, tensor(s, t, u), 0);
        }
      }
      for (int key : touched) tally[key] = 0;
      if (failure) throw *failure;
    }
  }
  return tensor;
}

Scheme Scheme::validate(int n, int rank, std::vector<Color> colors, std::vector<Color> dual) {
  if (n <= 0 || rank <= 0) throw InvalidScheme("n and r must be positive");
  ColorMatrix m(n, std::move(colors));
  if (static_cast<int>(dual.size()) != rank) throw InvalidScheme("dual map has wrong length");

  std::vector<int> seen(rank, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Color c = m(x, y);
      if (c < 0 || c >= rank) {
        throw InvalidScheme("color " + std::to_string(c) + " out of range at (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
      }
      if ((x == y) != (c == 0)) throw DiagonalViolation(x, y, c);
      ++seen[c];
    }
  }
  for (Color c = 0; c < rank; ++c) {
    if (seen[c] == 0) throw InvalidScheme("color " + std::to_string(c) + " does not occur");
    if (dual[c] < 0 || dual[c] >= rank || dual[dual[c]] != c) {
      throw DualViolation(-1, -1, "dual map is not an involution at " + std::to_string(c));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (m(y, x) != dual[m(x, y)]) {
        throw DualViolation(x, y,
                            "transpose has color " + std::to_string(m(y, x)) +
                                " but dual(" + std::to_string(m(x, y)) + ") = " +
                                std::to_string(dual[m(x, y)]));
      }
    }
  }

  Scheme out;
  out.tensor_ = intersection_numbers(m, rank);
  out.matrix_ = std::move(m);
  out.rank_ = rank;
  out.dual_ = std::move(dual);
  out.valency_.resize(rank);
  for (Color s = 0; s < rank; ++s) out.valency_[s] = out.tensor_(s, out.dual_[s], 0);
  return out;
}

Scheme Scheme::from_matrix(const ColorMatrix& m) {
  const int rank = m.color_bound();
  std::vector<Color> dual(rank, -1);
  for (int x = 0; x < m.n; ++x) {
    for (int y = 0; y < m.n; ++y) {
      const Color c = m(x, y);
      if (c < 0) throw InvalidScheme("negative color");
      if (dual[c] < 0) {
        dual[c] = m(y, x);
      } else if (dual[c] != m(y, x)) {
        throw DualViolation(x, y, "transpose of color " + std::to_string(c) +
                                      " is not a single color");
      }
    }
  }
  for (Color c = 0; c < rank; ++c) {
    if (dual[c] < 0) throw InvalidScheme("color " + std::to_string(c) + " does not occur");
  }
  return validate(m.n, rank, m.cells, std::move(dual));
}

Scheme Scheme::unchecked(ColorMatrix m, std::vector<Color> dual, IntersectionTensor tensor) {
  Scheme out;
  out.rank_ = tensor.rank();
  out.matrix_ = std::move(m);
  out.dual_ = std::move(dual);
  out.tensor_ = std::move(tensor);
  out.valency_.resize(out.rank_);
  for (Color s = 0; s < out.rank_; ++s) out.valency_[s] = out.tensor_(s, out.dual_[s], 0);
  return out;
}

std::vector<Point> Scheme::row(Point alpha, Color s) const {
  std::vector<Point> out;
  out.reserve(valency_[s]);
  for (Point y = 0; y < n(); ++y) {
    if (color(alpha, y) == s) out.push_back(y);
  }
  return out;
}

std::optional<int> is_k_equivalenced(const Scheme& x) {
  if (x.rank() < 2) return std::nullopt;
  const int k = x.valency(1);
  for (Color s = 2; s < x.rank(); ++s) {
    if (x.valency(s) != k) return std::nullopt;
  }
  return k;
}

bool is_symmetric(const Scheme& x) {
  for (Color s = 0; s < x.rank(); ++s) {
    if (x.dual(s) != s) return false;
  }
  return true;
}

bool is_commutative(const Scheme& x) {
  const int r = x.rank();
  for (Color s = 0; s < r; ++s)
    for (Color t = s + 1; t < r; ++t)
      for (Color u = 0; u < r; ++u)
        if (x.c(s, t, u) != x.c(t, s, u)) return false;
  return true;
}

int indistinguishing_number(const Scheme& x, Color s) {
  if (s == 0) throw DiagonalColor();
  int total = 0;
  for (Color u = 1; u < x.rank(); ++u) total += x.c(u, x.dual(u), s);
  return total;
}

int scheme_indistinguishing(const Scheme& x) {
  int best = 0;
  for (Color s = 1; s < x.rank(); ++s) best = std::max(best, indistinguishing_number(x, s));
  return best;
}

bool is_pseudocyclic(const Scheme& x) {
  const auto k = is_k_equivalenced(x);
  if (!k) return false;
  for (Color s = 1; s < x.rank(); ++s) {
    if (indistinguishing_number(x, s) != *k - 1) return false;
  }
  return true;
}

std::int64_t product_inner(const Scheme& x, Color s, Color t, Color u, Color v) {
  std::int64_t total = 0;
  for (Color w = 0; w < x.rank(); ++w) {
    total += static_cast<std::int64_t>(x.c(s, t, w)) * x.c(u, v, w) * x.valency(w);
  }
  return total;
}

}  // namespace scheme_forge
