#include "scheme_forge/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "scheme_forge/errors.hpp"
#include "scheme_forge/fission.hpp"
#include "scheme_forge/products.hpp"

namespace scheme_forge {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using PermSet = std::unordered_set<Permutation, PermHash>;

std::vector<Permutation> closure_of(int degree, const std::vector<Permutation>& gens,
                                    std::size_t bound) {
  PermSet seen;
  std::vector<Permutation> out;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  out.push_back(std::move(id));
  while (!queue.empty()) {
    const Permutation e = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = e * g;
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw BoundExceeded(bound);
        queue.push_back(next);
        out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

// Greedy generating set: keep each element not already generated.
std::vector<Permutation> greedy_generators(int degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  PermSet generated{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    const auto sub = closure_of(degree, gens, elements.size());
    generated = PermSet(sub.begin(), sub.end());
    if (generated.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Point y : images_) {
    if (y < 0 || y >= degree() || hit[y]) throw Error("images do not form a permutation");
    hit[y] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (int x = 0; x < degree(); ++x) count += images_[x] == x;
  return count;
}

int Permutation::order() const {
  long result = 1;
  for (const auto& cycle : cycles(*this)) result = std::lcm(result, static_cast<long>(cycle.size()));
  return static_cast<int>(result);
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  std::vector<Point> images(lhs.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = rhs.images_[lhs.images_[x]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<char> done(p.degree(), 0);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !done[x]; x = p(x)) {
      done[x] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw Error("generator degree mismatch");
  }
}

const std::vector<Permutation>& PermGroup::enumerate(std::size_t bound) {
  if (bound < 1) throw Error("bound must be positive");
  if (!elements_) elements_ = closure_of(degree_, generators_, bound);
  if (elements_->size() > bound) throw BoundExceeded(bound);
  return *elements_;
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_) throw Error("group elements were not enumerated");
  return *elements_;
}

std::vector<std::vector<Point>> point_orbits(const PermGroup& g) {
  std::vector<int> parent(g.degree());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : g.generators()) {
    for (Point x = 0; x < g.degree(); ++x) {
      const int a = find_root(parent, x), b = find_root(parent, gen(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Point>> orbits;
  std::vector<int> slot(g.degree(), -1);
  for (Point x = 0; x < g.degree(); ++x) {
    const int root = find_root(parent, x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(x);
  }
  return orbits;
}

bool is_transitive(const PermGroup& g) { return point_orbits(g).size() == 1; }

Scheme orbital_scheme(const PermGroup& g) {
  if (!is_transitive(g)) throw NotTransitive();
  const int n = g.degree();
  std::vector<int> parent(static_cast<std::size_t>(n) * n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : g.generators()) {
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        const int a = find_root(parent, x * n + y);
        const int b = find_root(parent, gen(x) * n + gen(y));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  ColorMatrix m(n, std::vector<Color>(parent.size()));
  for (std::size_t i = 0; i < parent.size(); ++i) m.cells[i] = find_root(parent, static_cast<int>(i));
  return Scheme::from_matrix(canonical_renumbering(m));
}

long order_four_unit(long p) {
  for (long g = 2; g < p; ++g) {
    if ((g * g) % p == p - 1) return g;
  }
  throw BadPrime(p);
}

PermGroup cyclotomic_frobenius(long p) {
  if (!is_prime(p) || p % 4 != 1) throw BadPrime(p);
  if (p > kDefaultMaxDegree) throw DegreeTooLarge(p, kDefaultMaxDegree);
  const long g = order_four_unit(p);
  std::vector<Point> shift(p), scale(p);
  for (long x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>((g * x) % p);
  }
  return PermGroup(static_cast<int>(p), {Permutation(shift), Permutation(scale)});
}

PermGroup vector_frobenius(long p, int d, long max_degree) {
  if (!is_prime(p) || p % 4 != 1) throw BadPrime(p);
  if (d < 1) throw Error("dimension must be positive");
  long degree = 1;
  for (int k = 0; k < d; ++k) {
    degree *= p;
    if (degree > max_degree) throw DegreeTooLarge(degree, max_degree);
  }
  const long g = order_four_unit(p);
  std::vector<Permutation> gens;
  long place = 1;
  for (int k = 0; k < d; ++k, place *= p) {
    std::vector<Point> shift(degree);
    for (long v = 0; v < degree; ++v) {
      const long digit = (v / place) % p;
      shift[v] = static_cast<Point>(v - digit * place + ((digit + 1) % p) * place);
    }
    gens.emplace_back(std::move(shift));
  }
  std::vector<Point> scale(degree);
  for (long v = 0; v < degree; ++v) {
    long image = 0, rest = v, pl = 1;
    for (int k = 0; k < d; ++k, rest /= p, pl *= p) image += ((rest % p) * g % p) * pl;
    scale[v] = static_cast<Point>(image);
  }
  gens.emplace_back(std::move(scale));
  return PermGroup(static_cast<int>(degree), std::move(gens));
}

bool frobenius_check(PermGroup& g, std::size_t bound) {
  const auto& elements = g.enumerate(bound);
  if (!is_transitive(g)) return false;
  bool some_fixes_point = false;
  for (const auto& e : elements) {
    if (e.is_identity()) continue;
    const int fixed = e.fixed_points();
    if (fixed >= 2) return false;
    some_fixes_point = some_fixes_point || fixed == 1;
  }
  return some_fixes_point;
}

PermGroup automorphism_group(const Scheme& x, std::size_t bound) {
  const int n = x.n();
  // Search order: 0 first, then points grouped by the fibers of the
  // 0-fission, smallest fibers first. Only affects pruning speed.
  std::vector<Point> order;
  {
    const Point first[] = {0};
    auto fibers = point_fission(x, first).fibers;
    std::stable_sort(fibers.begin(), fibers.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& f : fibers) order.insert(order.end(), f.begin(), f.end());
  }

  std::vector<Point> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Permutation> found;

  auto consistent = [&](int depth, Point y) {
    const Point p = order[depth];
    for (int i = 0; i < depth; ++i) {
      const Point q = order[i];
      if (x.color(q, p) != x.color(image[q], y) || x.color(p, q) != x.color(y, image[q])) return false;
    }
    return true;
  };

  auto search = [&](auto& self, int depth) -> void {
    if (depth == n) {
      if (found.size() >= bound) throw BoundExceeded(bound);
      found.emplace_back(image);
      return;
    }
    for (Point y = 0; y < n; ++y) {
      if (used[y] || !consistent(depth, y)) continue;
      used[y] = 1;
      image[order[depth]] = y;
      self(self, depth + 1);
      used[y] = 0;
    }
    image[order[depth]] = -1;
  };
  search(search, 0);

  std::sort(found.begin(), found.end());
  PermGroup group(n, greedy_generators(n, found));
  group.enumerate(bound);
  return group;
}

std::optional<Permutation> row_rotation(const Scheme& x, const PermGroup& aut, Point alpha) {
  for (const auto& e : aut.elements()) {
    if (e(alpha) != alpha || e.order() != 4) continue;
    bool rows = true;
    for (const auto& cycle : cycles(e)) {
      if (cycle.front() == alpha) continue;
      std::vector<Point> sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != x.row(alpha, x.color(alpha, cycle.front()))) {
        rows = false;
        break;
      }
    }
    if (rows) return e;
  }
  return std::nullopt;
}

std::optional<Permutation> sigma_alpha(const Scheme& x, const PermGroup& aut, Point alpha) {
  if (phi_psi(x).s3.empty()) throw HypothesisUnmet("S3 is empty");
  return row_rotation(x, aut, alpha);
}

bool fixes_two_only_identity(const PermGroup& aut) {
  for (const auto& e : aut.elements()) {
    if (!e.is_identity() && e.fixed_points() >= 2) return false;
  }
  return true;
}

bool two_point_rigidity(const Scheme& x, const PermGroup& aut) {
  const auto k = is_k_equivalenced(x);
  if (!k || *k != 4) throw NotFourEquivalenced();
  if (x.rank() < 4) throw HypothesisUnmet("two-point rigidity needs at least 4 relations");
  return fixes_two_only_identity(aut);
}

namespace {

std::optional<FrobeniusCertificate> certify(const Scheme& x, PermGroup candidate,
                                            std::size_t bound) {
  if (!frobenius_check(candidate, bound)) return std::nullopt;
  if (!same_partition(orbital_scheme(candidate).matrix(), x.matrix())) return std::nullopt;
  FrobeniusCertificate cert{std::move(candidate)};
  for (const auto& e : cert.group.elements()) {
    if (e.fixed_points() == 0) ++cert.kernel_size;
    if (e(0) == 0) ++cert.stabilizer_order;
  }
  ++cert.kernel_size;  // identity
  cert.orbital_match = true;
  return cert;
}

}  // namespace

std::optional<FrobeniusCertificate> frobenius_witness(const Scheme& x, const PermGroup& aut) {
  const auto k = is_k_equivalenced(x);
  if (!k || *k != 4) throw NotFourEquivalenced();
  const int n = x.n();
  const auto& elements = aut.elements();
  const std::size_t bound = elements.size();

  std::vector<Permutation> fixed_point_free;
  for (const auto& e : elements) {
    if (e.fixed_points() == 0) fixed_point_free.push_back(e);
  }

  // Kernel reconstruction: fixed-point-free elements plus identity.
  if (static_cast<int>(fixed_point_free.size()) + 1 == n) {
    PermSet kernel(fixed_point_free.begin(), fixed_point_free.end());
    kernel.insert(Permutation::identity(n));
    bool closed = true;
    for (const auto& a : fixed_point_free) {
      for (const auto& b : fixed_point_free) {
        if (!kernel.count(a * b)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) {
      if (auto sigma = row_rotation(x, aut, 0)) {
        std::vector<Permutation> gens = fixed_point_free;
        gens.push_back(*sigma);
        if (auto cert = certify(x, PermGroup(n, std::move(gens)), bound)) return cert;
      }
    }
  }

  // Fallback: <k, h> for fixed-point-free k and order-4 h fixing a point.
  std::vector<Permutation> rotations;
  for (const auto& e : elements) {
    if (e.order() == 4 && e.fixed_points() >= 1) rotations.push_back(e);
  }
  std::set<std::vector<Permutation>> tried;
  for (const auto& kern : fixed_point_free) {
    for (const auto& rot : rotations) {
      PermGroup candidate(n, {kern, rot});
      const auto& members = candidate.enumerate(bound);
      if (!tried.insert(members).second) continue;
      if (auto cert = certify(x, std::move(candidate), bound)) return cert;
    }
  }
  return std::nullopt;
}

std::optional<FrobeniusCertificate> frobenius_witness(const Scheme& x, std::size_t bound) {
  const auto k = is_k_equivalenced(x);
  if (!k || *k != 4) throw NotFourEquivalenced();
  return frobenius_witness(x, automorphism_group(x, bound));
}

}  // namespace scheme_forge
