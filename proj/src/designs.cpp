#include "scheme_forge/designs.hpp"

#include <algorithm>

#include "scheme_forge/errors.hpp"

namespace scheme_forge {

BlockDesign scheme_to_design(const Scheme& x) {
  const auto k = is_k_equivalenced(x);
  if (!k || *k != 4) throw NotFourEquivalenced();
  BlockDesign d{x.n(), {}};
  d.blocks.reserve(static_cast<std::size_t>(x.n()) * (x.rank() - 1));
  for (Point alpha = 0; alpha < x.n(); ++alpha) {
    for (Color s = 1; s < x.rank(); ++s) {
      const auto row = x.row(alpha, s);
      d.blocks.push_back({row[0], row[1], row[2], row[3]});
    }
  }
  return d;
}

std::vector<int> pair_incidences(const BlockDesign& d) {
  std::vector<int> count(static_cast<std::size_t>(d.n) * d.n, 0);
  for (const auto& b : d.blocks) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (b[i] < b[j]) ++count[static_cast<std::size_t>(b[i]) * d.n + b[j]];
  }
  std::vector<int> out;
  for (Point x = 0; x < d.n; ++x)
    for (Point y = x + 1; y < d.n; ++y) out.push_back(count[static_cast<std::size_t>(x) * d.n + y]);
  return out;
}

bool verify_design(const BlockDesign& d, int t, int k, int lambda) {
  if (t != 2 || k != 4) throw Error("only 2-designs with block size 4 are supported");
  for (const auto& b : d.blocks) {
    for (int i = 0; i < 4; ++i) {
      if (b[i] < 0 || b[i] >= d.n) return false;
      for (int j = 0; j < i; ++j) {
        if (b[i] == b[j]) return false;
      }
    }
  }
  const auto counts = pair_incidences(d);
  return std::all_of(counts.begin(), counts.end(), [&](int c) { return c == lambda; });
}

}  // namespace scheme_forge
