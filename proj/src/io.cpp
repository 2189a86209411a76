#include "scheme_forge/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "scheme_forge/errors.hpp"

namespace scheme_forge {

namespace {

long next_int(std::istream& in, const char* what) {
  long v = 0;
  if (!(in >> v)) throw ParseError(std::string("expected integer: ") + what);
  return v;
}

void expect_end(std::istream& in) {
  std::string rest;
  if (in >> rest) throw ParseError("unexpected trailing token '" + rest + "'");
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

Scheme read_scheme(std::istream& in) {
  const long n = next_int(in, "n");
  const long r = next_int(in, "r");
  if (n <= 0 || r <= 0 || n > 1 << 15) throw ParseError("header must hold positive n and r");
  std::vector<Color> cells(static_cast<std::size_t>(n) * n);
  for (auto& c : cells) {
    const long v = next_int(in, "color");
    if (v < 0 || v >= r) throw ParseError("color " + std::to_string(v) + " outside 0..r-1");
    c = static_cast<Color>(v);
  }
  expect_end(in);

  ColorMatrix m(static_cast<int>(n), std::move(cells));
  std::vector<Color> dual(r, -1);
  for (Point x = 0; x < m.n; ++x) {
    for (Point y = 0; y < m.n; ++y) {
      Color& d = dual[m(x, y)];
      if (d < 0) {
        d = m(y, x);
      } else if (d != m(y, x)) {
        throw DualViolation(x, y, "transpose of color " + std::to_string(m(x, y)) +
                                      " is not a single color");
      }
    }
  }
  for (Color c = 0; c < r; ++c) {
    if (dual[c] < 0) throw InvalidScheme("color " + std::to_string(c) + " does not occur");
  }
  return Scheme::validate(m.n, static_cast<int>(r), std::move(m.cells), std::move(dual));
}

Scheme read_scheme_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_scheme(in);
}

void write_scheme(std::ostream& out, const Scheme& x) {
  out << x.n() << ' ' << x.rank() << '\n';
  for (Point a = 0; a < x.n(); ++a) {
    for (Point b = 0; b < x.n(); ++b) {
      if (b) out << ' ';
      out << x.color(a, b);
    }
    out << '\n';
  }
}

PermGroup read_group(std::istream& in) {
  const long n = next_int(in, "n");
  const long g = next_int(in, "g");
  if (n <= 0 || g < 0 || n > 1 << 20) throw ParseError("header must hold positive n and g >= 0");
  std::vector<Permutation> gens;
  for (long k = 0; k < g; ++k) {
    std::vector<Point> images(n);
    for (auto& p : images) p = static_cast<Point>(next_int(in, "image"));
    try {
      gens.emplace_back(std::move(images));
    } catch (const Error& e) {
      throw ParseError("generator " + std::to_string(k) + ": " + e.what());
    }
  }
  expect_end(in);
  return PermGroup(static_cast<int>(n), std::move(gens));
}

PermGroup read_group_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& g) {
  out << g.degree() << ' ' << g.generators().size() << '\n';
  for (const auto& p : g.generators()) {
    for (int x = 0; x < p.degree(); ++x) {
      if (x) out << ' ';
      out << p(x);
    }
    out << '\n';
  }
}

}  // namespace scheme_forge
