#include "scheme_forge/planes.hpp"

#include <algorithm>
#include <string>

#include "scheme_forge/errors.hpp"

namespace scheme_forge {

namespace {

std::string cell_str(LatticeCell c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

int sign(int v) { return v > 0 ? 1 : -1; }

// The unique z with color(a,z) = s, color(b,z) = s, color(d,z) = diag.
Point unique_completion(const Scheme& x, Point a, Point b, Point d, Color s, Color diag,
                        LatticeCell where) {
  Point found = -1;
  for (Point z = 0; z < x.n(); ++z) {
    if (x.color(a, z) != s || x.color(b, z) != s || x.color(d, z) != diag) continue;
    if (found >= 0) {
      throw PlaneError(PlaneError::Kind::AmbiguousExtension,
                       "AmbiguousExtension: several candidates for cell " + cell_str(where));
    }
    found = z;
  }
  if (found < 0) {
    throw PlaneError(PlaneError::Kind::NoExtension,
                     "NoExtension: no candidate for cell " + cell_str(where));
  }
  return found;
}

}  // namespace

Plane::Plane(Color s, PlaneBase base, int radius, bool cross)
    : s_(s),
      base_(base),
      radius_(cross ? 1 : radius),
      cross_(cross),
      grid_(static_cast<std::size_t>(2 * radius_ + 1) * (2 * radius_ + 1), -1) {
  if (radius_ < 1) throw Error("plane radius must be positive");
  set({0, 0}, base.alpha);
  set({1, 0}, base.beta);
  set({0, 1}, base.gamma);
  set({-1, 0}, base.delta);
  set({0, -1}, base.epsilon);
}

bool Plane::contains(LatticeCell c) const {
  if (std::abs(c.i) > radius_ || std::abs(c.j) > radius_) return false;
  return !cross_ || c.i == 0 || c.j == 0;
}

std::vector<LatticeCell> Plane::cells() const {
  std::vector<LatticeCell> out;
  for (int i = -radius_; i <= radius_; ++i) {
    for (int j = -radius_; j <= radius_; ++j) {
      if (contains({i, j})) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Point> s_line(const Scheme& x, const PhiPsi& pp, Color s, Point x0, Point x1,
                          int length) {
  if (!pp.in_s3(s)) throw HypothesisUnmet("s-lines need s in S3");
  if (x.color(x0, x1) != s) {
    throw PlaneError(PlaneError::Kind::InvalidBase, "InvalidBase: color(x0,x1) != s");
  }
  std::vector<Point> line{x0, x1};
  while (static_cast<int>(line.size()) < length) {
    const Point prev = line[line.size() - 2], last = line.back();
    Point found = -1;
    for (Point y = 0; y < x.n(); ++y) {
      if (x.color(last, y) != s || x.color(prev, y) != pp.psi[s]) continue;
      if (found >= 0) {
        throw PlaneError(PlaneError::Kind::AmbiguousExtension,
                         "AmbiguousExtension: s-line step " + std::to_string(line.size()));
      }
      found = y;
    }
    if (found < 0) {
      throw PlaneError(PlaneError::Kind::NoExtension,
                       "NoExtension: s-line step " + std::to_string(line.size()));
    }
    line.push_back(found);
  }
  line.resize(std::max(length, 0));
  return line;
}

Plane build_plane(const Scheme& x, const PhiPsi& pp, Color s, const PlaneBase& base, int radius) {
  if (s <= 0 || s >= x.rank()) throw Error("relation out of range");
  const Point arms[] = {base.beta, base.gamma, base.delta, base.epsilon};
  for (int a = 0; a < 4; ++a) {
    if (x.color(base.alpha, arms[a]) != s) {
      throw PlaneError(PlaneError::Kind::InvalidBase, "InvalidBase: arm not in alpha*s");
    }
    for (int b = 0; b < a; ++b) {
      if (arms[a] == arms[b]) {
        throw PlaneError(PlaneError::Kind::InvalidBase, "InvalidBase: repeated arm point");
      }
    }
  }
  if (x.color(base.beta, base.delta) != pp.psi[s] || x.color(base.gamma, base.epsilon) != pp.psi[s]) {
    throw PlaneError(PlaneError::Kind::InvalidBase,
                     "InvalidBase: opposite arms are not psi(s)-related");
  }

  const bool cross = !pp.in_s3(s);
  Plane plane(s, base, radius, cross);
  if (cross) return plane;

  const int r = plane.radius();
  const struct {
    Point arm;
    LatticeCell step;
  } axes[] = {{base.beta, {1, 0}}, {base.gamma, {0, 1}}, {base.delta, {-1, 0}}, {base.epsilon, {0, -1}}};
  for (const auto& axis : axes) {
    const auto line = s_line(x, pp, s, base.alpha, axis.arm, r + 1);
    for (int k = 2; k <= r; ++k) plane.set({axis.step.i * k, axis.step.j * k}, line[k]);
  }

  for (int si : {1, -1}) {
    for (int sj : {1, -1}) {
      for (int a = 1; a <= r; ++a) {
        for (int b = 1; b <= r; ++b) {
          const LatticeCell c{si * a, sj * b};
          const Point left = plane.at({c.i - sign(c.i), c.j});
          const Point down = plane.at({c.i, c.j - sign(c.j)});
          const Point corner = plane.at({c.i - sign(c.i), c.j - sign(c.j)});
          plane.set(c, unique_completion(x, left, down, corner, s, pp.phi[s], c));
        }
      }
    }
  }
  return plane;
}

bool check_rotation_invariance(const Scheme& x, const Plane& plane) {
  const Point alpha = plane.at({0, 0});
  for (const auto& c : plane.cells()) {
    const Color here = x.color(alpha, plane.at(c));
    for (int k = 1; k < 4; ++k) {
      const LatticeCell d = RotationAction::apply(c, k);
      if (plane.contains(d) && x.color(alpha, plane.at(d)) != here) return false;
    }
  }
  return true;
}

bool check_sim(const Scheme& x, Point alpha, const Plane& plane_s, const Plane& plane_t) {
  if (plane_s.at({0, 0}) != alpha || plane_t.at({0, 0}) != alpha) throw BaseMismatch();
  const auto cells_s = plane_s.cells();
  const auto cells_t = plane_t.cells();
  for (const auto& a : cells_s) {
    const LatticeCell ra = RotationAction::apply(a);
    if (!plane_s.contains(ra)) continue;
    for (const auto& b : cells_t) {
      const LatticeCell rb = RotationAction::apply(b);
      if (!plane_t.contains(rb)) continue;
      if (x.color(plane_s.at(a), plane_t.at(b)) != x.color(plane_s.at(ra), plane_t.at(rb))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<PlaneBase> valid_bases(const Scheme& x, const PhiPsi& pp, Color s, Point alpha) {
  const auto row = x.row(alpha, s);
  const Color opposite = pp.psi[s];
  std::vector<PlaneBase> out;
  for (Point b : row)
    for (Point g : row)
      for (Point d : row)
        for (Point e : row) {
          if (b == g || b == d || b == e || g == d || g == e || d == e) continue;
          if (x.color(b, d) != opposite || x.color(g, e) != opposite) continue;
          out.push_back({alpha, b, g, d, e});
        }
  return out;
}

PlaneBase rotation_base(const Permutation& sigma, Point alpha, Point beta) {
  const Point g = sigma(beta);
  const Point d = sigma(g);
  return {alpha, beta, g, d, sigma(d)};
}

std::optional<std::pair<Plane, Plane>> find_sim_pair(const Scheme& x, const PhiPsi& pp,
                                                     Point alpha, Color s, Color t, int radius) {
  std::vector<Plane> planes_s, planes_t;
  for (const auto& b : valid_bases(x, pp, s, alpha)) planes_s.push_back(build_plane(x, pp, s, b, radius));
  for (const auto& b : valid_bases(x, pp, t, alpha)) planes_t.push_back(build_plane(x, pp, t, b, radius));
  for (const auto& ps : planes_s) {
    for (const auto& pt : planes_t) {
      if (check_sim(x, alpha, ps, pt)) return std::make_pair(ps, pt);
    }
  }
  return std::nullopt;
}

bool rotation_matches(const Plane& plane, const Permutation& sigma) {
  for (const auto& c : plane.cells()) {
    const LatticeCell d = RotationAction::apply(c);
    if (plane.contains(d) && sigma(plane.at(c)) != plane.at(d)) return false;
  }
  return true;
}

}  // namespace scheme_forge
