#pragma once

// Named test instances: orbital schemes of the shipped Frobenius groups
// plus a few hand-built schemes.

#include <string>
#include <vector>

#include "scheme_forge/groups.hpp"
#include "scheme_forge/scheme.hpp"

namespace scheme_forge::testing {

/// Rank-2 scheme on n points: diagonal 0, everything else 1.
inline Scheme rank_two(int n) {
  std::vector<Color> cells(static_cast<std::size_t>(n) * n, 1);
  for (int x = 0; x < n; ++x) cells[static_cast<std::size_t>(x) * n + x] = 0;
  return Scheme::validate(n, 2, cells, {0, 1});
}

inline Scheme cyclotomic(long p) { return orbital_scheme(cyclotomic_frobenius(p)); }
inline Scheme vector_scheme(long p, int d) { return orbital_scheme(vector_frobenius(p, d)); }

struct Instance {
  std::string name;
  Scheme scheme;
};

/// The five-member acceptance battery.
inline std::vector<Instance> battery() {
  return {{"Z5", cyclotomic(5)},
          {"Z13", cyclotomic(13)},
          {"Z17", cyclotomic(17)},
          {"Z29", cyclotomic(29)},
          {"(Z5)^2", vector_scheme(5, 2)}};
}

/// Cyclotomic Z13 colors under the canonical numbering.
inline constexpr Color kZ13ClassOf1 = 1;  // {1,5,8,12}
inline constexpr Color kZ13ClassOf2 = 2;  // {2,3,10,11}
inline constexpr Color kZ13ClassOf4 = 3;  // {4,6,7,9}

}  // namespace scheme_forge::testing
