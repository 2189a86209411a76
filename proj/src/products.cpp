#include "scheme_forge/products.hpp"

#include <algorithm>
#include <optional>

#include "scheme_forge/errors.hpp"

namespace scheme_forge {

namespace {

struct SquareShape {
  bool in_s2 = false;
  Color phi = 0;
  Color psi = 0;
};

// s*s for a non-diagonal s of a 4-equivalenced scheme: either 4*1 + 3s or
// 4*1 + 2u + v with u, v distinct and non-diagonal.
std::optional<SquareShape> square_shape(const Scheme& x, Color s) {
  if (x.c(s, s, 0) != 4) return std::nullopt;
  std::vector<std::pair<Color, int>> terms;
  for (Color w = 1; w < x.rank(); ++w) {
    if (x.c(s, s, w) != 0) terms.emplace_back(w, x.c(s, s, w));
  }
  if (terms.size() == 1 && terms[0].first == s && terms[0].second == 3) {
    return SquareShape{true, s, s};
  }
  if (terms.size() == 2) {
    auto [u, cu] = terms[0];
    auto [v, cv] = terms[1];
    if (cu == 1 && cv == 2) {
      std::swap(u, v);
      std::swap(cu, cv);
    }
    if (cu == 2 && cv == 1) return SquareShape{false, u, v};
  }
  return std::nullopt;
}

// Raw shape of s*t read off the tensor, with the predicted shape from phi.
struct ProductShape {
  std::optional<ProductClass> cls;
  Color doubled = -1;
};

ProductShape raw_product_shape(const Scheme& x, Color s, Color t) {
  std::vector<std::pair<Color, int>> terms;
  for (Color w = 0; w < x.rank(); ++w) {
    if (x.c(s, t, w) != 0) terms.emplace_back(w, x.c(s, t, w));
  }
  const auto ones = std::count_if(terms.begin(), terms.end(), [](auto& e) { return e.second == 1; });
  std::vector<Color> twos;
  for (auto& [w, c] : terms) {
    if (c == 2) twos.push_back(w);
  }
  const bool only_ones_and_twos =
      static_cast<std::size_t>(ones) + twos.size() == terms.size();
  if (!only_ones_and_twos) return {};
  if (ones == 4 && twos.empty()) return {ProductClass::FourDistinct, -1};
  if (ones == 2 && twos.size() == 1 && (twos[0] == s || twos[0] == t)) {
    return {ProductClass::TwoPlusDouble, twos[0]};
  }
  if (ones == 0 && twos.size() == 2 && std::set<Color>{twos.begin(), twos.end()} == std::set<Color>{s, t}) {
    return {ProductClass::TwoTwo, -1};
  }
  return {};
}

ProductShape predicted_product_shape(const PhiPsi& pp, Color s, Color t) {
  const bool s_is_phi_t = s == pp.phi[t];
  const bool t_is_phi_s = t == pp.phi[s];
  if (!s_is_phi_t && !t_is_phi_s) return {ProductClass::FourDistinct, -1};
  if (s_is_phi_t && t_is_phi_s) return {ProductClass::TwoTwo, -1};
  // t = phi(s) gives s*t = u1 + u2 + 2s; the mirrored case doubles t.
  return {ProductClass::TwoPlusDouble, t_is_phi_s ? s : t};
}

void require_four_equivalenced(const Scheme& x) {
  const auto k = is_k_equivalenced(x);
  if (!k || *k != 4) throw NotFourEquivalenced();
}

std::string rel(Color c) { return std::to_string(c); }

}  // namespace

RelationSet complex_product(const Scheme& x, const RelationSet& lhs, const RelationSet& rhs) {
  RelationSet out;
  for (Color r : lhs) {
    for (Color t : rhs) {
      for (Color u = 0; u < x.rank(); ++u) {
        if (x.c(r, t, u) != 0) out.insert(u);
      }
    }
  }
  return out;
}

RelationSet closure(const Scheme& x, const RelationSet& generators) {
  RelationSet current = generators;
  current.insert(0);
  for (;;) {
    RelationSet next = current;
    for (Color s : current) next.insert(x.dual(s));
    const RelationSet prod = complex_product(x, current, current);
    next.insert(prod.begin(), prod.end());
    if (next == current) return current;
    current = std::move(next);
  }
}

PhiPsi phi_psi(const Scheme& x) {
  require_four_equivalenced(x);
  PhiPsi out;
  out.phi.resize(x.rank());
  out.psi.resize(x.rank());
  out.phi[0] = out.psi[0] = 0;
  for (Color s = 1; s < x.rank(); ++s) {
    const auto shape = square_shape(x, s);
    if (!shape) throw DichotomyViolation(s);
    out.phi[s] = shape->phi;
    out.psi[s] = shape->psi;
    (shape->in_s2 ? out.s2 : out.s3).insert(s);
  }
  return out;
}

const char* to_string(ProductClass c) {
  switch (c) {
    case ProductClass::FourDistinct:
      return "four-distinct";
    case ProductClass::TwoPlusDouble:
      return "two-plus-double";
    case ProductClass::TwoTwo:
      return "two-two";
  }
  return "?";
}

ProductClass product_class(const Scheme& x, const PhiPsi& pp, Color s, Color t) {
  if (s == 0 || t == 0) throw DiagonalColor();
  if (s == t) throw TrichotomyViolation(s, t, "relations must be distinct");
  const auto raw = raw_product_shape(x, s, t);
  if (!raw.cls) throw TrichotomyViolation(s, t, "product fits none of the three shapes");
  const auto predicted = predicted_product_shape(pp, s, t);
  if (*raw.cls != *predicted.cls || raw.doubled != predicted.doubled) {
    throw TrichotomyViolation(s, t,
                              std::string("tensor gives ") + to_string(*raw.cls) +
                                  " but the phi criterion gives " + to_string(*predicted.cls));
  }
  return *raw.cls;
}

bool wr(const Scheme& x, Color s, Color t) {
  if (s == t) return false;
  return closure(x, {t}).count(s) == 0 && closure(x, {s}).count(t) == 0;
}

long LemmaReport::checked(const std::string& check) const {
  for (const auto& t : tallies) {
    if (t.check == check) return t.checked;
  }
  return 0;
}

LemmaReport verify_structure_lemmas(const Scheme& x) {
  require_four_equivalenced(x);
  const int r = x.rank();
  LemmaReport report;
  auto tally = [&](const char* name) -> long& {
    for (auto& t : report.tallies) {
      if (t.check == name) return t.checked;
    }
    report.tallies.push_back({name, 0});
    return report.tallies.back().checked;
  };
  auto fail = [&](const char* name, std::string detail) {
    report.findings.push_back({name, std::move(detail)});
  };

  // Tensor identities: identity convolution, row sums and transposes.
  long& tensor_count = tally(kCheckTensor);
  for (Color s = 0; s < r; ++s) {
    for (Color t = 0; t < r; ++t) {
      long row_sum = 0;
      for (Color u = 0; u < r; ++u) {
        row_sum += static_cast<long>(x.c(s, t, u)) * x.valency(u);
        if (x.c(x.dual(s), x.dual(t), x.dual(u)) != x.c(t, s, u)) {
          fail(kCheckTensor, "transpose identity fails at (" + rel(s) + "," + rel(t) + "," + rel(u) + ")");
        }
        if (s == 0 && x.c(0, t, u) != (t == u ? 1 : 0)) {
          fail(kCheckTensor, "identity convolution fails at (0," + rel(t) + "," + rel(u) + ")");
        }
      }
      if (row_sum != static_cast<long>(x.valency(s)) * x.valency(t)) {
        fail(kCheckTensor, "row-sum identity fails at (" + rel(s) + "," + rel(t) + ")");
      }
      ++tensor_count;
    }
  }

  // Square dichotomy.
  PhiPsi pp;
  pp.phi.assign(r, 0);
  pp.psi.assign(r, 0);
  bool squares_ok = true;
  long& square_count = tally(kCheckSquare);
  for (Color s = 1; s < r; ++s) {
    ++square_count;
    const auto shape = square_shape(x, s);
    if (!shape) {
      fail(kCheckSquare, "s*s has neither admissible shape for s = " + rel(s));
      squares_ok = false;
      pp.phi[s] = pp.psi[s] = s;
      continue;
    }
    pp.phi[s] = shape->phi;
    pp.psi[s] = shape->psi;
    (shape->in_s2 ? pp.s2 : pp.s3).insert(s);
  }

  // Product trichotomy with its phi criteria (needs a sound phi).
  long& product_count = tally(kCheckProduct);
  if (squares_ok) {
    for (Color s = 1; s < r; ++s) {
      for (Color t = 1; t < r; ++t) {
        if (s == t) continue;
        ++product_count;
        try {
          product_class(x, pp, s, t);
        } catch (const TrichotomyViolation& e) {
          fail(kCheckProduct, e.what());
        }
      }
    }
  }

  // phi, psi bijective on S3 with psi = phi o phi.
  long& bijection_count = tally(kCheckPhiBijection);
  RelationSet phi_image, psi_image;
  for (Color s : pp.s3) {
    ++bijection_count;
    if (!pp.in_s3(pp.phi[s])) fail(kCheckPhiBijection, "phi(" + rel(s) + ") is not in S3");
    if (pp.psi[s] != pp.phi[pp.phi[s]]) {
      fail(kCheckPhiBijection, "psi(" + rel(s) + ") != phi(phi(" + rel(s) + "))");
    }
    phi_image.insert(pp.phi[s]);
    psi_image.insert(pp.psi[s]);
  }
  if (phi_image != pp.s3) fail(kCheckPhiBijection, "phi is not a bijection on S3");
  if (psi_image != pp.s3) fail(kCheckPhiBijection, "psi is not a bijection on S3");

  // Some v with |uv| = 4 for every u once |S| >= 5.
  long& four_count = tally(kCheckFourProduct);
  if (r >= 5) {
    for (Color u = 1; u < r; ++u) {
      ++four_count;
      bool found = false;
      for (Color v = 1; v < r && !found; ++v) {
        found = complex_product(x, {u}, {v}).size() == 4;
      }
      if (!found) fail(kCheckFourProduct, "no v with |uv| = 4 for u = " + rel(u));
    }
  }

  // Pairs s wr t.
  std::vector<RelationSet> closures(r);
  for (Color s = 0; s < r; ++s) closures[s] = closure(x, {s});
  long& wr_count = tally(kCheckWreathProduct);
  long& wr3_count = tally(kCheckWreathIntersection);
  for (Color s = 1; s < r; ++s) {
    for (Color t = 1; t < r; ++t) {
      if (s == t || closures[t].count(s) || closures[s].count(t)) continue;
      ++wr_count;
      int terms = 0;
      bool all_single = true, outside = true;
      for (Color w = 0; w < r; ++w) {
        const int c = x.c(s, t, w);
        if (c == 0) continue;
        ++terms;
        all_single = all_single && c == 1;
        outside = outside && !closures[s].count(w) && !closures[t].count(w);
      }
      if (terms != 4 || !all_single) {
        fail(kCheckWreathProduct, "s*t is not four distinct terms for (" + rel(s) + "," + rel(t) + ")");
      }
      if (!outside) {
        fail(kCheckWreathProduct, "s*t meets <s> or <t> for (" + rel(s) + "," + rel(t) + ")");
      }
      if (pp.in_s3(s) && pp.in_s3(t)) {
        ++wr3_count;
        const RelationSet a = complex_product(x, {pp.phi[t]}, {pp.phi[s]});
        const RelationSet b = complex_product(x, {pp.psi[t]}, {pp.psi[s]});
        std::vector<Color> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.size() > 1) {
          fail(kCheckWreathIntersection,
               "|phi(t)phi(s) & psi(t)psi(s)| = " + std::to_string(common.size()) + " for (" +
                   rel(s) + "," + rel(t) + ")");
        }
      }
    }
  }
  return report;
}

}  // namespace scheme_forge
