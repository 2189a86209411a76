#pragma once

// Brute-force reference computations. None of these call into the
// library's tensor, closure or search code.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "scheme_forge/scheme.hpp"

namespace scheme_forge::oracle {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline IntMatrix adjacency(const ColorMatrix& m, Color s) {
  IntMatrix a = IntMatrix::Zero(m.n, m.n);
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y) a(x, y) = m(x, y) == s ? 1 : 0;
  return a;
}

/// c(s,t,u) read off A_s A_t at the first pair of color u.
inline std::int64_t intersection(const ColorMatrix& m, Color s, Color t, Color u) {
  const IntMatrix prod = adjacency(m, s) * adjacency(m, t);
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y)
      if (m(x, y) == u) return prod(x, y);
  return -1;
}

/// <A_s A_t, A_u A_v> = Tr((A_s A_t)(A_u A_v)^T) / n, all integer arithmetic.
inline std::int64_t hermitian_product(const ColorMatrix& m, Color s, Color t, Color u, Color v) {
  const IntMatrix lhs = adjacency(m, s) * adjacency(m, t);
  const IntMatrix rhs = adjacency(m, u) * adjacency(m, v);
  const std::int64_t trace = (lhs * rhs.transpose()).trace();
  return trace / m.n;
}

/// c(r(x,y)) counted directly: z outside {x,y} seen from x and y in the
/// same relation (symmetric schemes).
inline int indistinguishing(const ColorMatrix& m, int x, int y) {
  int count = 0;
  for (int z = 0; z < m.n; ++z)
    if (z != x && z != y && m(x, z) == m(y, z)) ++count;
  return count;
}

/// |Aut| by walking the n! permutations in lexicographic order, skipping
/// every permutation that shares an inconsistent prefix.
inline std::uint64_t automorphism_count(const ColorMatrix& m) {
  const int n = m.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  for (;;) {
    int bad = -1;
    for (int k = 0; k < n && bad < 0; ++k) {
      for (int i = 0; i <= k; ++i) {
        if (m(i, k) != m(perm[i], perm[k]) || m(k, i) != m(perm[k], perm[i])) {
          bad = k;
          break;
        }
      }
    }
    if (bad < 0) {
      ++count;
      if (!std::next_permutation(perm.begin(), perm.end())) break;
      continue;
    }
    // Largest arrangement of the suffix, so next_permutation changes perm[bad].
    std::sort(perm.begin() + bad + 1, perm.end(), std::greater<>());
    if (!std::next_permutation(perm.begin(), perm.end())) break;
  }
  return count;
}

/// Orbits of explicitly listed group elements on ordered pairs, as a color matrix.
template <class Elements>
ColorMatrix orbital_partition(int n, const Elements& elements) {
  ColorMatrix out(n, std::vector<Color>(static_cast<std::size_t>(n) * n, -1));
  Color next = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (out(x, y) >= 0) continue;
      for (const auto& g : elements) out(g(x), g(y)) = next;
      ++next;
    }
  return out;
}

}  // namespace scheme_forge::oracle
