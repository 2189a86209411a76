#include "scheme_forge/report.hpp"

#include <cstdlib>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "scheme_forge/designs.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/products.hpp"

namespace scheme_forge {

namespace {

// Data shared read-only by all checks, computed before they run.
struct Context {
  const Scheme& x;
  ReportOptions options;
  std::optional<int> k{};
  std::optional<PhiPsi> pp{};
  std::string pp_error{};
  std::optional<PermGroup> aut{};
  std::string aut_error{};
  std::optional<LemmaReport> lemmas{};
  std::vector<RelationSet> closures{};

  bool four() const { return k && *k == 4; }
};

struct Outcome {
  Status status;
  std::string details;
};

Outcome pass(std::string d = {}) { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
Outcome unmet(std::string d) { return {Status::NotApplicable, std::move(d)}; }

struct Entry {
  const char* name;
  const char* statement;
  std::function<Outcome(const Context&)> run;
};

Outcome lemma_outcome(const Context& c, const char* check) {
  if (!c.four()) return unmet("not 4-equivalenced");
  const long count = c.lemmas->checked(check);
  std::string first;
  long failures = 0;
  for (const auto& f : c.lemmas->findings) {
    if (f.check != check) continue;
    if (failures++ == 0) first = f.detail;
  }
  if (failures) return fail(std::to_string(failures) + " violation(s); first: " + first);
  if (count == 0) return unmet("no instances");
  return pass(std::to_string(count) + " instance(s) checked");
}

// Outcome of a check needing phi/psi; reports why it is unavailable.
std::optional<Outcome> need_phi(const Context& c) {
  if (!c.four()) return unmet("not 4-equivalenced");
  if (!c.pp) return fail(c.pp_error);
  return std::nullopt;
}

std::optional<Outcome> need_aut(const Context& c) {
  if (!c.four()) return unmet("not 4-equivalenced");
  if (!c.aut) return fail("automorphism group unavailable: " + c.aut_error);
  return std::nullopt;
}

// Fission checks visit every alpha unless Aut is known transitive.
std::vector<Point> fission_points(const Context& c, std::string& note) {
  if (c.aut && is_transitive(*c.aut) && c.x.n() > 64) {
    note = " (alpha = 0; Aut is transitive)";
    return {0};
  }
  std::vector<Point> all(c.x.n());
  for (Point a = 0; a < c.x.n(); ++a) all[a] = a;
  note = " (every alpha)";
  return all;
}

std::vector<Entry> registry() {
  std::vector<Entry> r;
  r.push_back({"axioms", "diagonal relation, transposes and constant intersection numbers",
               [](const Context& c) {
                 return pass("n=" + std::to_string(c.x.n()) + " r=" + std::to_string(c.x.rank()));
               }});
  r.push_back({"four-equivalenced", "every non-diagonal valency equals 4", [](const Context& c) {
                 if (c.four()) return pass("k=4");
                 return unmet(c.k ? "k=" + std::to_string(*c.k) : "valencies differ");
               }});
  r.push_back({"symmetric", "k-equivalenced with k even implies symmetric", [](const Context& c) {
                 if (!c.k || *c.k % 2 != 0) return unmet("k is not even");
                 return is_symmetric(c.x) ? pass() : fail("some relation is not self-paired");
               }});
  r.push_back({"commutative", "symmetric schemes are commutative", [](const Context& c) {
                 if (!is_symmetric(c.x)) return unmet("not symmetric");
                 return is_commutative(c.x) ? pass() : fail("c(s,t,u) != c(t,s,u) somewhere");
               }});
  r.push_back({"pseudocyclic", "4-equivalenced schemes are pseudocyclic with c(s) = 3",
               [](const Context& c) {
                 if (!c.four()) return unmet("not 4-equivalenced");
                 for (Color s = 1; s < c.x.rank(); ++s) {
                   const int cs = indistinguishing_number(c.x, s);
                   if (cs != 3) return fail("c(" + std::to_string(s) + ") = " + std::to_string(cs));
                 }
                 return pass("c(s) = 3 for all " + std::to_string(c.x.rank() - 1) + " relations");
               }});
  r.push_back({kCheckTensor, "tensor identity, row-sum and transpose identities",
               [](const Context& c) { return lemma_outcome(c, kCheckTensor); }});
  r.push_back({kCheckSquare, "s*s = 4*1 + 3s or 4*1 + 2u + v",
               [](const Context& c) { return lemma_outcome(c, kCheckSquare); }});
  r.push_back({kCheckProduct, "s*t has one of three shapes, decided by phi",
               [](const Context& c) { return lemma_outcome(c, kCheckProduct); }});
  r.push_back({kCheckPhiBijection, "phi, psi are bijections on S3 and psi = phi o phi",
               [](const Context& c) { return lemma_outcome(c, kCheckPhiBijection); }});
  r.push_back({kCheckFourProduct, "with |S| >= 5 every u has v with |uv| = 4",
               [](const Context& c) { return lemma_outcome(c, kCheckFourProduct); }});
  r.push_back({kCheckWreathProduct, "s wr t gives s*t = a1+a2+a3+a4 outside <s> and <t>",
               [](const Context& c) { return lemma_outcome(c, kCheckWreathProduct); }});
  r.push_back({kCheckWreathIntersection, "s, t in S3 with s wr t: |phi(t)phi(s) & psi(t)psi(s)| <= 1",
               [](const Context& c) { return lemma_outcome(c, kCheckWreathIntersection); }});
  r.push_back({"wr-inner-product", "<s*t, s*t> = 16 for every s wr t", [](const Context& c) {
                 if (!c.four()) return unmet("not 4-equivalenced");
                 long pairs = 0;
                 for (Color s = 1; s < c.x.rank(); ++s)
                   for (Color t = 1; t < c.x.rank(); ++t) {
                     if (s == t || c.closures[s].count(t) || c.closures[t].count(s)) continue;
                     ++pairs;
                     const auto v = product_inner(c.x, s, t, s, t);
                     if (v != 16) {
                       return fail("<s*t,s*t> = " + std::to_string(v) + " for (" + std::to_string(s) +
                                   "," + std::to_string(t) + ")");
                     }
                   }
                 if (pairs == 0) return unmet("no wr pairs");
                 return pass(std::to_string(pairs) + " ordered pair(s)");
               }});
  r.push_back({"plane-rotation-invariance",
               "planes at alpha = 0 keep color(alpha, cell) on quarter-turn orbits",
               [](const Context& c) {
                 if (auto o = need_phi(c)) return *o;
                 long planes = 0;
                 for (Color s = 1; s < c.x.rank(); ++s) {
                   for (const auto& base : valid_bases(c.x, *c.pp, s, 0)) {
                     try {
                       const auto plane = build_plane(c.x, *c.pp, s, base, c.options.radius);
                       if (!check_rotation_invariance(c.x, plane)) {
                         return fail("rotation invariance fails for s=" + std::to_string(s));
                       }
                     } catch (const PlaneError& e) {
                       return fail(std::string("s=") + std::to_string(s) + ": " + e.what());
                     }
                     ++planes;
                   }
                 }
                 return pass(std::to_string(planes) + " plane(s) at radius " +
                             std::to_string(c.options.radius) + "; " + kColumnAxisReading);
               }});
  r.push_back({"sim-wr-pairs", "s in S3, s wr t: some s-plane and t-plane at alpha are sigma-compatible",
               [](const Context& c) {
                 if (auto o = need_phi(c)) return *o;
                 if (c.pp->s3.empty()) return unmet("S3 is empty");
                 std::optional<Permutation> sigma;
                 if (c.aut) sigma = row_rotation(c.x, *c.aut, 0);
                 long pairs = 0, searched = 0;
                 for (Color s : c.pp->s3) {
                   for (Color t = 1; t < c.x.rank(); ++t) {
                     if (s == t || c.closures[s].count(t) || c.closures[t].count(s)) continue;
                     ++pairs;
                     bool ok = false;
                     if (sigma) {
                       const auto ps = build_plane(c.x, *c.pp, s,
                                                   rotation_base(*sigma, 0, c.x.row(0, s).front()),
                                                   c.options.radius);
                       const auto pt = build_plane(c.x, *c.pp, t,
                                                   rotation_base(*sigma, 0, c.x.row(0, t).front()),
                                                   c.options.radius);
                       ok = check_sim(c.x, 0, ps, pt);
                     }
                     if (!ok) {
                       ++searched;
                       ok = find_sim_pair(c.x, *c.pp, 0, s, t, c.options.radius).has_value();
                     }
                     if (!ok) {
                       return fail("no compatible planes for (" + std::to_string(s) + "," +
                                   std::to_string(t) + ")");
                     }
                   }
                 }
                 if (pairs == 0) return unmet("no wr pairs with s in S3");
                 return pass(std::to_string(pairs) + " pair(s); " + std::to_string(searched) +
                             " needed exhaustive base search");
               }});
  r.push_back({"two-point-rigidity", "|S| >= 4: an automorphism fixing two points is the identity",
               [](const Context& c) {
                 if (auto o = need_aut(c)) return *o;
                 if (c.x.rank() < 4) return unmet("r < 4");
                 return two_point_rigidity(c.x, *c.aut)
                            ? pass("|Aut| = " + std::to_string(c.aut->order()))
                            : fail("a non-identity automorphism fixes two points");
               }});
  r.push_back({"sigma-alpha", "S3 nonempty: an order-4 automorphism fixing alpha has the rows as orbits",
               [](const Context& c) {
                 if (auto o = need_phi(c)) return *o;
                 if (c.pp->s3.empty()) return unmet("S3 is empty");
                 if (auto o = need_aut(c)) return *o;
                 for (Point a = 0; a < c.x.n(); ++a) {
                   if (!sigma_alpha(c.x, *c.aut, a)) return fail("none at alpha=" + std::to_string(a));
                 }
                 return pass("found for all " + std::to_string(c.x.n()) + " points");
               }});
  r.push_back({"plane-sigma-compatibility", "sigma_alpha(plane(i,j)) = plane(-j,i)",
               [](const Context& c) {
                 if (auto o = need_phi(c)) return *o;
                 if (c.pp->s3.empty()) return unmet("S3 is empty");
                 if (auto o = need_aut(c)) return *o;
                 const auto sigma = sigma_alpha(c.x, *c.aut, 0);
                 if (!sigma) return fail("no sigma at alpha=0");
                 long planes = 0;
                 for (Color s = 1; s < c.x.rank(); ++s) {
                   for (Point beta : c.x.row(0, s)) {
                     const auto plane =
                         build_plane(c.x, *c.pp, s, rotation_base(*sigma, 0, beta), c.options.radius);
                     if (!rotation_matches(plane, *sigma)) {
                       return fail("mismatch for s=" + std::to_string(s));
                     }
                     ++planes;
                   }
                 }
                 return pass(std::to_string(planes) + " plane(s)");
               }});
  r.push_back({"frobenius-witness", "every 4-equivalenced scheme is Frobenius", [](const Context& c) {
                 if (auto o = need_aut(c)) return *o;
                 const auto cert = frobenius_witness(c.x, *c.aut);
                 if (!cert) return fail("no Frobenius subgroup of Aut has these orbitals");
                 return pass("|H| = " + std::to_string(cert->group.order()) + ", kernel " +
                             std::to_string(cert->kernel_size) + ", stabilizer " +
                             std::to_string(cert->stabilizer_order));
               }});
  r.push_back({"semiregular-fission", "|S| >= 3: the alpha-fission is semiregular off alpha",
               [](const Context& c) {
                 if (!c.four()) return unmet("not 4-equivalenced");
                 if (c.x.rank() < 3) return unmet("r < 3");
                 std::string note;
                 for (Point a : fission_points(c, note)) {
                   const Point delta[] = {a};
                   if (!is_semiregular_off(point_fission(c.x, delta), a)) {
                     return fail("not semiregular off alpha=" + std::to_string(a));
                   }
                 }
                 return pass("checked" + note);
               }});
  r.push_back({"fission-fibers-in-rows", "every fiber of the alpha-fission lies in a row alpha*u",
               [](const Context& c) {
                 if (!c.four()) return unmet("not 4-equivalenced");
                 std::string note;
                 for (Point a : fission_points(c, note)) {
                   const Point delta[] = {a};
                   if (!fibers_within_rows(c.x, point_fission(c.x, delta), a)) {
                     return fail("a fiber crosses rows at alpha=" + std::to_string(a));
                   }
                 }
                 return pass("checked" + note);
               }});
  r.push_back({"base-number", "S2 nonempty and |S| != 2 imply b(X) = 2", [](const Context& c) {
                 if (auto o = need_phi(c)) return *o;
                 const bool hypothesis = !c.pp->s2.empty() && c.x.rank() != 2;
                 if (!hypothesis) {
                   if (c.x.n() > 64) return unmet("hypothesis unmet; not computed");
                   try {
                     const auto b = base_number(c.x, c.options.cutoff);
                     return unmet("hypothesis unmet; computed b = " + std::to_string(b.size));
                   } catch (const CutoffExceeded&) {
                     return unmet("hypothesis unmet; b > " + std::to_string(c.options.cutoff));
                   }
                 }
                 try {
                   const auto b = base_number(c.x, c.options.cutoff);
                   std::string witness;
                   for (Point p : b.witness) witness += (witness.empty() ? "" : ",") + std::to_string(p);
                   if (b.size != 2) return fail("b = " + std::to_string(b.size));
                   return pass("b = 2, witness {" + witness + "}");
                 } catch (const CutoffExceeded&) {
                   return fail("b > " + std::to_string(c.options.cutoff));
                 }
               }});
  r.push_back({"design", "the rows alpha*s form a 2-(n,4,3) design", [](const Context& c) {
                 if (!c.four()) return unmet("not 4-equivalenced");
                 const auto d = scheme_to_design(c.x);
                 return verify_design(d)
                            ? pass("b = " + std::to_string(d.blocks.size()) + ", k = 4, lambda = 3")
                            : fail("some pair is not covered exactly 3 times");
               }});
  return r;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "n/a (hypothesis unmet)";
  }
  return "?";
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return false;
  }
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

unsigned default_thread_cap() {
  if (const char* env = std::getenv("SCHEME_FORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Report build_report(const Scheme& x, std::string source, const ReportOptions& options) {
  Context ctx{x, options};
  ctx.k = is_k_equivalenced(x);
  if (ctx.four()) {
    try {
      ctx.pp = phi_psi(x);
    } catch (const Error& e) {
      ctx.pp_error = e.what();
    }
    try {
      ctx.aut = automorphism_group(x, options.bound);
    } catch (const Error& e) {
      ctx.aut_error = e.what();
    }
    ctx.lemmas = verify_structure_lemmas(x);
    ctx.closures.resize(x.rank());
    for (Color s = 0; s < x.rank(); ++s) ctx.closures[s] = closure(x, {s});
  }

  const auto entries = registry();
  std::vector<Outcome> outcomes(entries.size());
  auto run_one = [&](std::size_t i) {
    try {
      outcomes[i] = entries[i].run(ctx);
    } catch (const std::exception& e) {
      outcomes[i] = fail(std::string("error: ") + e.what());
    }
  };

  const unsigned threads = options.threads ? options.threads : default_thread_cap();
  if (threads <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run_one(i);
  } else {
    for (std::size_t start = 0; start < entries.size(); start += threads) {
      std::vector<std::future<void>> batch;
      for (std::size_t i = start; i < std::min(entries.size(), start + threads); ++i) {
        batch.push_back(std::async(std::launch::async, run_one, i));
      }
      for (auto& f : batch) f.get();
    }
  }

  Report report{std::move(source), x.n(), x.rank(), {}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    report.checks.push_back(
        {entries[i].name, entries[i].statement, outcomes[i].status, std::move(outcomes[i].details)});
  }
  return report;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"status", to_string(c.status)},
                      {"details", c.details}});
  }
  return {{"source", report.source},
          {"n", report.n},
          {"r", report.r},
          {"passed", report.passed()},
          {"checks", checks}};
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "scheme " << report.source << ": n=" << report.n << " r=" << report.r << '\n';
  for (const auto& c : report.checks) {
    out << '[' << to_string(c.status) << "] " << c.name << ": " << c.statement;
    if (!c.details.empty()) out << " (" << c.details << ')';
    out << '\n';
  }
  out << (report.passed() ? "all asserted checks pass" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace scheme_forge
