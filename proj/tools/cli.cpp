#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "scheme_forge/designs.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/fission.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/io.hpp"
#include "scheme_forge/planes.hpp"
#include "scheme_forge/products.hpp"
#include "scheme_forge/report.hpp"

namespace scheme_forge::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string output;
  std::string points = "0";
  long p = 0;
  int d = 1;
  std::size_t bound = kDefaultGroupBound;
  int cutoff = kDefaultBaseCutoff;
  int radius = kDefaultPlaneRadius;
  int s = -1;
  int alpha = 0;
  bool json = false;
};

// Thrown for failures in reading the input file, mapped to exit code 3.
struct InputFailure {
  std::string message;
};

Scheme load(const std::string& path) {
  try {
    return read_scheme_file(path);
  } catch (const ParseError& e) {
    throw InputFailure{e.what()};
  } catch (const InvalidScheme& e) {
    throw InputFailure{e.what()};
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<Point> parse_points(const std::string& text, int n) {
  std::vector<Point> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--points", "not an integer: '" + item + "'");
    }
    if (used != item.size() || v < 0 || v >= n) {
      throw CLI::ValidationError("--points", "point out of range: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--points", "empty point list");
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<Point>& v) {
  std::string s;
  for (Point p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

int write_generated(PermGroup group, const Options& o, std::ostream& out) {
  if (ends_with(o.output, ".perm")) {
    std::ofstream f(o.output, std::ios::binary);
    write_group(f, group);
    return kExitOk;
  }
  const Scheme x = orbital_scheme(group);
  if (o.output.empty()) {
    write_scheme(out, x);
  } else {
    std::ofstream f(o.output, std::ios::binary);
    write_scheme(f, x);
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const Scheme x = read_scheme_file(o.file);
    out << "valid association scheme: n=" << x.n() << " r=" << x.rank() << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvalidScheme& e) {
    err << e.what() << '\n';
    return kExitVerification;
  }
}

int cmd_props(const Options& o, std::ostream& out) {
  const Scheme x = load(o.file);
  json j;
  j["n"] = x.n();
  j["r"] = x.rank();
  j["valencies"] = std::vector<int>(x.valencies().begin(), x.valencies().end());
  const auto k = is_k_equivalenced(x);
  j["k"] = k ? json(*k) : json(nullptr);
  j["symmetric"] = is_symmetric(x);
  j["commutative"] = is_commutative(x);
  std::vector<int> cs;
  for (Color s = 1; s < x.rank(); ++s) cs.push_back(indistinguishing_number(x, s));
  j["indistinguishing"] = cs;
  j["indistinguishing_max"] = x.rank() > 1 ? scheme_indistinguishing(x) : 0;
  j["pseudocyclic"] = is_pseudocyclic(x);
  if (k && *k == 4) {
    const auto pp = phi_psi(x);
    j["s2"] = pp.s2;
    j["s3"] = pp.s3;
    j["phi"] = pp.phi;
    j["psi"] = pp.psi;
  }
  if (o.json) {
    emit(out, j);
    return kExitOk;
  }
  out << "n = " << x.n() << ", r = " << x.rank() << '\n';
  out << "k-equivalenced: " << (k ? std::to_string(*k) : "no") << '\n';
  out << "symmetric: " << (is_symmetric(x) ? "yes" : "no") << '\n';
  out << "commutative: " << (is_commutative(x) ? "yes" : "no") << '\n';
  out << "pseudocyclic: " << (is_pseudocyclic(x) ? "yes" : "no") << '\n';
  out << "indistinguishing numbers:";
  for (int c : cs) out << ' ' << c;
  out << '\n';
  if (j.contains("phi")) {
    out << "S2: " << j["s2"].dump() << "\nS3: " << j["s3"].dump() << '\n';
    out << "phi: " << j["phi"].dump() << "\npsi: " << j["psi"].dump() << '\n';
  }
  return kExitOk;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  const Scheme x = load(o.file);
  const auto report = verify_structure_lemmas(x);
  if (o.json) {
    json j;
    for (const auto& t : report.tallies) j["checked"][t.check] = t.checked;
    j["findings"] = json::array();
    for (const auto& f : report.findings) j["findings"].push_back({{"check", f.check}, {"detail", f.detail}});
    j["ok"] = report.ok();
    emit(out, j);
  } else {
    for (const auto& t : report.tallies) out << t.check << ": " << t.checked << " checked\n";
    for (const auto& f : report.findings) out << "VIOLATION " << f.check << ": " << f.detail << '\n';
    out << (report.ok() ? "all structural checks pass" : "structural checks FAILED") << '\n';
  }
  return report.ok() ? kExitOk : kExitVerification;
}

int cmd_plane(const Options& o, std::ostream& out, std::ostream& err) {
  const Scheme x = load(o.file);
  if (o.s <= 0 || o.s >= x.rank()) throw CLI::ValidationError("--s", "must be a non-diagonal relation");
  if (o.alpha < 0 || o.alpha >= x.n()) throw CLI::ValidationError("--alpha", "point out of range");
  const auto pp = phi_psi(x);
  const auto bases = valid_bases(x, pp, o.s, o.alpha);
  if (bases.empty()) {
    err << "no valid base for s=" << o.s << " at alpha=" << o.alpha << '\n';
    return kExitVerification;
  }
  const Plane plane = build_plane(x, pp, o.s, bases.front(), o.radius);
  const bool invariant = check_rotation_invariance(x, plane);
  const int r = plane.radius();

  json orbits = json::array();
  std::set<LatticeCell> seen;
  for (const auto& c : plane.cells()) {
    if (seen.count(c)) continue;
    json cells = json::array(), colors = json::array();
    for (int k = 0; k < 4; ++k) {
      const auto d = RotationAction::apply(c, k);
      if (!plane.contains(d) || seen.count(d)) continue;
      seen.insert(d);
      cells.push_back({d.i, d.j});
      colors.push_back(x.color(o.alpha, plane.at(d)));
    }
    orbits.push_back({{"cells", cells}, {"colors", colors}});
  }
  json grid = json::array();
  for (int i = -r; i <= r; ++i) {
    json row = json::array();
    for (int j = -r; j <= r; ++j) row.push_back(plane.contains({i, j}) ? json(plane.at({i, j})) : json(nullptr));
    grid.push_back(row);
  }

  if (o.json) {
    const auto& b = plane.base();
    emit(out, {{"s", o.s},
               {"alpha", o.alpha},
               {"radius", r},
               {"kind", plane.is_cross() ? "S2" : "S3"},
               {"base", {b.alpha, b.beta, b.gamma, b.delta, b.epsilon}},
               {"column_axis", kColumnAxisReading},
               {"grid", grid},
               {"orbits", orbits},
               {"rotation_invariant", invariant}});
  } else {
    out << "plane s=" << o.s << " alpha=" << o.alpha << " radius=" << r
        << (plane.is_cross() ? " (S2 cross)" : " (S3 square)") << '\n';
    out << kColumnAxisReading << '\n';
    out << "grid rows i=" << -r << ".." << r << ", columns j=" << -r << ".." << r << ":\n";
    for (const auto& row : grid) {
      std::string line;
      for (const auto& cell : row) {
        std::string v = cell.is_null() ? "." : std::to_string(cell.get<int>());
        line += (line.empty() ? "" : " ") + std::string(v.size() < 3 ? 3 - v.size() : 0, ' ') + v;
      }
      out << line << '\n';
    }
    out << "color(alpha, cell) by quarter-turn orbit:\n";
    for (const auto& orb : orbits) out << "  " << orb["cells"].dump() << " -> " << orb["colors"].dump() << '\n';
    out << "rotation invariance: " << (invariant ? "pass" : "FAIL") << '\n';
  }
  return invariant ? kExitOk : kExitVerification;
}

int cmd_fission(const Options& o, std::ostream& out) {
  const Scheme x = load(o.file);
  const auto delta = parse_points(o.points, x.n());
  const auto cc = point_fission(x, delta);
  json semi = json::object();
  for (Point a : delta) {
    try {
      semi[std::to_string(a)] = is_semiregular_off(cc, a);
    } catch (const NotAFiber&) {
      semi[std::to_string(a)] = nullptr;
    }
  }
  if (o.json) {
    emit(out, {{"points", delta},
               {"num_colors", cc.num_colors},
               {"num_fibers", cc.fibers.size()},
               {"fibers", cc.fibers},
               {"complete", is_complete(cc)},
               {"semiregular_off", semi}});
    return kExitOk;
  }
  out << "points {" << join(delta) << "}: " << cc.num_colors << " colors, " << cc.fibers.size()
      << " fibers, " << (is_complete(cc) ? "complete" : "not complete") << '\n';
  for (const auto& f : cc.fibers) out << "  fiber {" << join(f) << "}\n";
  for (auto& [a, v] : semi.items()) {
    out << "  semiregular off " << a << ": " << (v.is_null() ? "n/a" : (v.get<bool>() ? "yes" : "no")) << '\n';
  }
  return kExitOk;
}

int cmd_base(const Options& o, std::ostream& out, std::ostream& err) {
  const Scheme x = load(o.file);
  try {
    const auto b = base_number(x, o.cutoff);
    out << "b(X) = " << b.size << ", witness {" << join(b.witness) << "}\n";
    return kExitOk;
  } catch (const CutoffExceeded& e) {
    err << e.what() << '\n';
    return kExitVerification;
  }
}

int cmd_aut(const Options& o, std::ostream& out) {
  const Scheme x = load(o.file);
  const auto aut = automorphism_group(x, o.bound);
  out << "|Aut| = " << aut.order() << ", " << aut.generators().size() << " generator(s)\n";
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    write_group(f, aut);
  } else {
    write_group(out, aut);
  }
  return kExitOk;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  if (ends_with(o.file, ".perm")) {
    PermGroup g = [&] {
      try {
        return read_group_file(o.file);
      } catch (const ParseError& e) {
        throw InputFailure{e.what()};
      }
    }();
    const bool ok = frobenius_check(g, o.bound);
    out << "Frobenius group: " << (ok ? "yes" : "no") << " (order " << g.order() << ")\n";
    return ok ? kExitOk : kExitVerification;
  }
  const Scheme x = load(o.file);
  const auto cert = frobenius_witness(x, o.bound);
  if (!cert) {
    out << "no Frobenius witness found\n";
    return kExitVerification;
  }
  out << "Frobenius witness: order " << cert->group.order() << ", kernel " << cert->kernel_size
      << ", stabilizer " << cert->stabilizer_order << ", orbitals match: "
      << (cert->orbital_match ? "yes" : "no") << '\n';
  write_group(out, cert->group);
  return kExitOk;
}

int cmd_design(const Options& o, std::ostream& out) {
  const Scheme x = load(o.file);
  const auto d = scheme_to_design(x);
  const bool ok = verify_design(d);
  if (o.json) {
    emit(out, {{"n", d.n}, {"b", d.blocks.size()}, {"k", 4}, {"lambda", 3}, {"valid", ok}});
  } else {
    out << "(n, b, k, lambda) = (" << d.n << ", " << d.blocks.size() << ", 4, 3): "
        << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitVerification;
}

int cmd_report(const Options& o, std::ostream& out) {
  const Scheme x = load(o.file);
  ReportOptions ro;
  ro.bound = o.bound;
  ro.cutoff = o.cutoff;
  ro.radius = o.radius;
  const auto report = build_report(x, o.file, ro);
  if (o.json) {
    emit(out, to_json(report));
  } else {
    out << to_text(report);
  }
  return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and dissect 4-equivalenced association schemes", "scheme_forge"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "scheme file (.asc)")->required(); };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  auto bound_opt = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "group enumeration bound")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "generate an orbital scheme of a Frobenius group");
  gen->require_subcommand(1);
  auto* cyc = gen->add_subcommand("cyclotomic", "Z_p with the order-4 multiplier");
  cyc->add_option("--p", o.p, "prime congruent to 1 mod 4")->required();
  cyc->add_option("-o,--output", o.output, "output file (.asc, or .perm for the group)");
  cyc->callback([&] { action = [&] { return write_generated(cyclotomic_frobenius(o.p), o, out); }; });
  auto* vec = gen->add_subcommand("vector", "(Z_p)^d with the order-4 scalar");
  vec->add_option("--p", o.p, "prime congruent to 1 mod 4")->required();
  vec->add_option("--d", o.d, "dimension")->check(CLI::PositiveNumber);
  vec->add_option("-o,--output", o.output, "output file (.asc, or .perm for the group)");
  vec->callback([&] { action = [&] { return write_generated(vector_frobenius(o.p, o.d), o, out); }; });

  auto* check = app.add_subcommand("check", "validate the scheme axioms");
  file_arg(check);
  check->callback([&] { action = [&] { return cmd_check(o, out, err); }; });

  auto* props = app.add_subcommand("props", "valencies, symmetry, pseudocyclicity, phi and psi");
  file_arg(props);
  json_flag(props);
  props->callback([&] { action = [&] { return cmd_props(o, out); }; });

  auto* lemmas = app.add_subcommand("lemmas", "exhaustive structural checks on the tensor");
  file_arg(lemmas);
  json_flag(lemmas);
  lemmas->callback([&] { action = [&] { return cmd_lemmas(o, out); }; });

  auto* plane = app.add_subcommand("plane", "build an s-plane and check rotation invariance");
  file_arg(plane);
  json_flag(plane);
  plane->add_option("--s", o.s, "relation")->required();
  plane->add_option("--alpha", o.alpha, "base point");
  plane->add_option("--radius", o.radius, "window radius")->check(CLI::PositiveNumber);
  plane->callback([&] { action = [&] { return cmd_plane(o, out, err); }; });

  auto* fission = app.add_subcommand("fission", "individualize points and stabilize");
  file_arg(fission);
  json_flag(fission);
  fission->add_option("--points", o.points, "comma-separated points");
  fission->callback([&] { action = [&] { return cmd_fission(o, out); }; });

  auto* base = app.add_subcommand("base", "base number b(X) and a witness");
  file_arg(base);
  base->add_option("--cutoff", o.cutoff, "largest base size searched")->check(CLI::PositiveNumber);
  base->callback([&] { action = [&] { return cmd_base(o, out, err); }; });

  auto* aut = app.add_subcommand("aut", "automorphism group by backtracking");
  file_arg(aut);
  bound_opt(aut);
  aut->add_option("-o,--output", o.output, "write generators as .perm");
  aut->callback([&] { action = [&] { return cmd_aut(o, out); }; });

  auto* frob = app.add_subcommand("frobenius", "Frobenius witness (.asc) or Frobenius test (.perm)");
  frob->add_option("FILE", o.file, "scheme (.asc) or group (.perm)")->required();
  bound_opt(frob);
  frob->callback([&] { action = [&] { return cmd_frobenius(o, out); }; });

  auto* design = app.add_subcommand("design", "block design of the rows and its 2-(n,4,3) check");
  file_arg(design);
  json_flag(design);
  design->callback([&] { action = [&] { return cmd_design(o, out); }; });

  auto* report = app.add_subcommand("report", "run every applicable verifier");
  file_arg(report);
  json_flag(report);
  bound_opt(report);
  report->add_option("--cutoff", o.cutoff, "base search cutoff")->check(CLI::PositiveNumber);
  report->add_option("--radius", o.radius, "plane radius")->check(CLI::PositiveNumber);
  report->callback([&] { action = [&] { return cmd_report(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const InputFailure& e) {
    err << "invalid input: " << e.message << '\n';
    return kExitInvalidInput;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const BadPrime& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const DegreeTooLarge& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace scheme_forge::cli
