#include "scheme_forge/fission.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "scheme_forge/errors.hpp"
#include "scheme_forge/products.hpp"

namespace scheme_forge {

namespace {

// One refinement round. Returns the number of colors after the round.
int refine_once(ColorMatrix& m, int num_colors) {
  const int n = m.n;
  const std::int64_t base = num_colors;
  std::map<std::vector<std::int64_t>, Color> ids;
  ColorMatrix next(n, std::vector<Color>(m.cells.size()));
  std::vector<std::int64_t> sig(n + 1);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      sig[0] = m(x, y);
      for (Point z = 0; z < n; ++z) sig[z + 1] = m(x, z) * base + m(z, y);
      std::sort(sig.begin() + 1, sig.end());
      auto [it, fresh] = ids.try_emplace(sig, static_cast<Color>(ids.size()));
      next(x, y) = it->second;
    }
  }
  m = std::move(next);
  return static_cast<int>(ids.size());
}

std::vector<std::vector<Point>> diagonal_fibers(const ColorMatrix& m) {
  std::map<Color, std::vector<Point>> by_color;
  std::vector<Color> order;
  for (Point x = 0; x < m.n; ++x) {
    auto& f = by_color[m(x, x)];
    if (f.empty()) order.push_back(m(x, x));
    f.push_back(x);
  }
  std::vector<std::vector<Point>> out;
  out.reserve(order.size());
  for (Color c : order) out.push_back(std::move(by_color[c]));
  return out;
}

}  // namespace

CoherentConfiguration wl_stabilize(const ColorMatrix& seed) {
  ColorMatrix m = seed;
  for (Point x = 0; x < m.n; ++x) {
    for (Point y = 0; y < m.n; ++y) m(x, y) = 2 * seed(x, y) + (x == y ? 1 : 0);
  }
  m = canonical_renumbering(m);
  int colors = m.color_bound();
  for (;;) {
    const int next = refine_once(m, colors);
    if (next == colors) break;
    colors = next;
  }
  CoherentConfiguration cc;
  cc.fibers = diagonal_fibers(m);
  cc.matrix = std::move(m);
  cc.num_colors = colors;
  return cc;
}

CoherentConfiguration point_fission(const Scheme& x, std::span<const Point> delta) {
  const int n = x.n();
  const int slots = static_cast<int>(delta.size()) + 1;
  std::vector<int> slot(n, 0);
  for (std::size_t i = 0; i < delta.size(); ++i) slot[delta[i]] = static_cast<int>(i) + 1;
  ColorMatrix seed(n, std::vector<Color>(static_cast<std::size_t>(n) * n));
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) seed(a, b) = (x.color(a, b) * slots + slot[a]) * slots + slot[b];
  }
  return wl_stabilize(canonical_renumbering(seed));
}

bool is_complete(const CoherentConfiguration& cc) {
  return static_cast<long>(cc.num_colors) == static_cast<long>(cc.n()) * cc.n();
}

bool is_semiregular_off(const CoherentConfiguration& cc, Point alpha) {
  const int n = cc.n();
  for (Point y = 0; y < n; ++y) {
    if (y != alpha && cc.color(y, y) == cc.color(alpha, alpha)) throw NotAFiber(alpha);
  }
  std::vector<int> degree(cc.num_colors, 0);
  for (Point a = 0; a < n; ++a) {
    if (a == alpha) continue;
    std::fill(degree.begin(), degree.end(), 0);
    for (Point b = 0; b < n; ++b) {
      if (b == alpha) continue;
      if (++degree[cc.color(a, b)] > 1) return false;
    }
  }
  return true;
}

bool fibers_within_rows(const Scheme& x, const CoherentConfiguration& cc, Point alpha) {
  for (const auto& fiber : cc.fibers) {
    const Color u = x.color(alpha, fiber.front());
    for (Point p : fiber) {
      if (x.color(alpha, p) != u) return false;
    }
  }
  return true;
}

FissionReport fission_report(const Scheme& x, std::span<const Point> delta) {
  const auto cc = point_fission(x, delta);
  FissionReport report;
  report.distinguished.assign(delta.begin(), delta.end());
  report.num_colors = cc.num_colors;
  report.num_fibers = static_cast<int>(cc.fibers.size());
  report.complete = is_complete(cc);
  if (delta.size() == 1 && is_semiregular_off(cc, delta[0])) report.semiregular_off = delta[0];
  return report;
}

BaseResult base_number(const Scheme& x, int cutoff) {
  const int n = x.n();
  if (n == 1) return {0, {}};
  auto complete = [&](const std::vector<Point>& delta) {
    return is_complete(point_fission(x, delta));
  };

  for (int size = 1; size <= std::min(cutoff, n); ++size) {
    if (size == 2) {
      std::optional<PhiPsi> pp;
      try {
        pp = phi_psi(x);
      } catch (const HypothesisUnmet&) {
      }
      if (pp && !pp->s2.empty()) {
        for (Point beta = 1; beta < n; ++beta) {
          if (pp->in_s2(x.color(0, beta))) {
            if (complete({0, beta})) return {2, {0, beta}};
            break;
          }
        }
      }
    }
    // Lexicographic combinations of the given size.
    std::vector<Point> delta(size);
    for (int i = 0; i < size; ++i) delta[i] = i;
    for (;;) {
      if (complete(delta)) return {size, delta};
      int i = size - 1;
      while (i >= 0 && delta[i] == n - size + i) --i;
      if (i < 0) break;
      ++delta[i];
      for (int j = i + 1; j < size; ++j) delta[j] = delta[j - 1] + 1;
    }
  }
  throw CutoffExceeded(cutoff);
}

}  // namespace scheme_forge
