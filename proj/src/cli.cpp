#include "icoflux/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "icoflux/bifurcation.hpp"
#include "icoflux/invariants.hpp"
#include "icoflux/params.hpp"

namespace icoflux {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

Json json_vec(const Vec12& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(round12(x));
  return arr;
}

const char* kClassNames[5] = {"C(e)", "C(g5)", "C(g5^2)", "C(g2)", "C(g2g5)"};

int print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  int failures = 0;
  for (const auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    if (!c.pass) ++failures;
  }
  return failures;
}

// ---- subcommand payloads ----

int cmd_group_dump(const std::string& format, std::ostream& out) {
  const auto& group = IcosahedralGroup::instance();
  if (format == "json") {
    Json arr = Json::array();
    for (int i = 0; i < group.size(); ++i)
      arr.push_back({{"index", i},
                     {"cycles", group.element(i).cycle_string()},
                     {"class", kClassNames[group.class_of(i)]}});
    out << Json{{"order", group.size()}, {"elements", arr}}.dump(2) << "\n";
  } else {
    out << "icosahedral group: 60 elements, 5 conjugacy classes\n";
    for (int i = 0; i < group.size(); ++i) {
      char idx[16];
      std::snprintf(idx, sizeof idx, "g%02d", i);
      out << idx << "  " << kClassNames[group.class_of(i)] << "\t"
          << group.element(i).cycle_string() << "\n";
    }
  }
  return 0;
}

void dump_exact_matrix(const Q5Matrix& m, const std::string& name, std::ostream& out) {
  out << name << " =\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "  ") << m.at(i, j).str();
    out << "\n";
  }
}

int cmd_irreps_validate(bool dump_p, std::ostream& out) {
  auto checks = validate_block_structure();
  int failures = print_checks(checks, out);
  if (dump_p) {
    dump_exact_matrix(canonical_P(), "P", out);
    dump_exact_matrix(canonical_P_inverse(), "P^-1", out);
  }
  out << (failures == 0 ? "all block-structure checks passed\n"
                        : "block-structure validation FAILED\n");
  return failures == 0 ? 0 : 1;
}

std::vector<std::string> block_var_names(int irrep) {
  return block_slot(irrep) == 3 ? std::vector<std::string>{"x", "y", "z", "t", "u"}
         : irrep == 1           ? std::vector<std::string>{"x"}
                                : std::vector<std::string>{"x", "y", "z"};
}

int cmd_invariants(int irrep, int degree, const std::string& format,
                   std::ostream& out) {
  InvariantBasis basis = irrep == 1
                             ? InvariantBasis{1, degree, {power_invariant(degree)}}
                             : invariant_basis(irrep, degree);
  auto names = block_var_names(irrep);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& p : basis.polys) arr.push_back(p.str(names));
    out << Json{{"irrep", irrep}, {"degree", degree}, {"dimension", basis.dimension()},
                {"basis", arr}}
               .dump(2)
        << "\n";
  } else {
    out << "invariants of irrep rho" << irrep << " at degree " << degree
        << ": dimension " << basis.dimension() << "\n";
    for (int j = 0; j < basis.dimension(); ++j)
      out << "  p_" << degree << (j + 1) << " = " << basis.polys[j].str(names) << "\n";
  }
  return 0;
}

int cmd_energy(const std::string& params_path, bool dump, std::ostream& out) {
  ParamsFile pf = load_params_file(params_path);
  CompiledEnergy ce(pf.params);
  out << "coefficients: ";
  const char* names[9] = {"a", "b", "c", "d", "c1", "c2", "c3", "c4", "c5"};
  auto vals = pf.params.as_doubles();
  for (int i = 0; i < 9; ++i) out << (i ? ", " : "") << names[i] << "=" << fmt12(vals[i]);
  out << "\nmode: " << (ce.exact_mode() ? "exact rational coefficients" : "floating point")
      << "\n";
  out << "E(0) = " << fmt12(ce.energy(Vec12{})) << "\n";
  out << "origin Hessian spectrum:";
  for (const auto& c : hessian_spectrum_origin(pf.params))
    out << "  " << fmt12(c.value) << " (x" << c.multiplicity << ")";
  out << "\n";
  if (dump) {
    if (!ce.exact_mode()) {
      out << "symbolic dump requires exact rational coefficients\n";
      return 1;
    }
    out << "E = " << ce.symbolic().str() << "\n";
  }
  return 0;
}

Json branch_json(const BranchReport& b) {
  Json j;
  j["id"] = branch_label(b.id);
  j["symmetry"] = b.symmetry;
  j["exists"] = b.exists;
  j["admissible"] = b.admissible;
  j["boundary"] = b.boundary;
  j["stable"] = b.stable;
  j["orbit_size"] = b.orbit_size;
  if (b.exists) {
    j["coords"] = json_vec(b.coords);
    j["energy"] = round12(b.energy);
    Json spec = Json::array();
    for (const auto& s : b.spectrum)
      spec.push_back({{"value", round12(s.value)}, {"multiplicity", s.multiplicity}});
    j["spectrum"] = spec;
  }
  return j;
}

int cmd_branches(const std::string& params_path, const std::string& format,
                 std::ostream& out) {
  ParamsFile pf = load_params_file(params_path);
  auto branches = branch_solutions(pf.params);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& b : branches) arr.push_back(branch_json(b));
    Json doc;
    doc["label"] = phase_label(branches);
    doc["n_minima_closed_form"] = closed_form_minima_count(branches);
    doc["branches"] = arr;
    out << doc.dump(2) << "\n";
  } else {
    out << "phase label: " << phase_label(branches)
        << "   admissible stable minima (with orbits): "
        << closed_form_minima_count(branches) << "\n";
    for (const auto& b : branches) {
      out << branch_label(b.id) << " [" << b.symmetry << "]";
      if (!b.exists) {
        out << "  does not exist at these parameters\n";
        continue;
      }
      out << "  admissible=" << (b.admissible ? "yes" : "no")
          << (b.boundary ? " (boundary)" : "") << "  stable=" << (b.stable ? "yes" : "no")
          << "  orbit=" << b.orbit_size << "  E=" << fmt12(b.energy) << "\n  coords:";
      for (double v : b.coords) out << " " << fmt12(v);
      out << "\n  spectrum:";
      for (const auto& s : b.spectrum)
        out << "  " << fmt12(s.value) << " (x" << s.multiplicity << ")";
      out << "\n";
    }
  }
  return 0;
}

Json critical_point_json(const CriticalPoint& cp) {
  Json j;
  j["coords"] = json_vec(cp.coords);
  j["energy"] = round12(cp.energy);
  j["grad_norm"] = round12(cp.grad_norm);
  j["isotropy"] = cp.isotropy;
  j["isotropy_order"] = cp.isotropy_order;
  j["stable"] = cp.stable;
  j["admissible"] = cp.admissible;
  Json ev = Json::array();
  for (double v : cp.eigenvalues) ev.push_back(round12(v));
  j["eigenvalues"] = ev;
  return j;
}

int cmd_minimize(const std::string& params_path, int starts,
                 std::optional<uint64_t> seed_flag, const std::string& format,
                 std::ostream& out) {
  ParamsFile pf = load_params_file(params_path);
  CompiledEnergy ce(pf.params);
  MinimizeOptions opt;
  opt.n_starts = starts;
  opt.seed = seed_flag ? *seed_flag : pf.seed.value_or(0);
  MinimizeResult res = minimize_restarts(ce, opt);

  std::sort(res.points.begin(), res.points.end(),
            [](const CriticalPoint& x, const CriticalPoint& y) {
              if (x.energy != y.energy) return x.energy < y.energy;
              return x.coords < y.coords;
            });

  if (format == "json") {
    Json arr = Json::array();
    for (const auto& cp : res.points) arr.push_back(critical_point_json(cp));
    Json doc;
    doc["starts"] = starts;
    doc["seed"] = opt.seed;
    doc["dropped"] = res.dropped;
    doc["critical_points"] = arr;
    out << doc.dump(2) << "\n";
  } else {
    out << "starts=" << starts << " seed=" << opt.seed << " dropped=" << res.dropped
        << " distinct points=" << res.points.size() << "\n";
    for (const auto& cp : res.points) {
      out << "E=" << fmt12(cp.energy) << "  " << cp.isotropy
          << (cp.stable ? "  minimum" : "  saddle/unstable")
          << (cp.admissible ? "  admissible" : "  inadmissible") << "\n  coords:";
      for (double v : cp.coords) out << " " << fmt12(v);
      out << "\n";
    }
  }
  return 0;
}

struct Range {
  double lo = 0, hi = 0, step = 1;
};

Range parse_range(const std::string& text) {
  Range r;
  std::istringstream in(text);
  std::string part;
  std::vector<double> vals;
  while (std::getline(in, part, ':')) vals.push_back(std::strtod(part.c_str(), nullptr));
  if (vals.size() != 3) throw CLI::ValidationError("range", "expected lo:hi:step");
  r.lo = vals[0];
  r.hi = vals[1];
  r.step = vals[2];
  if (!(r.step > 0) || r.hi < r.lo)
    throw CLI::ValidationError("range", "need step > 0 and hi >= lo");
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

int cmd_scan(const std::string& params_path, const std::string& a_range,
             const std::string& d_range, const std::string& out_path,
             int verify_restarts, std::optional<uint64_t> seed_flag,
             std::ostream& out) {
  ParamsFile pf = load_params_file(params_path);
  Range ra = parse_range(a_range), rd = parse_range(d_range);
  ScanGrid grid{ra.lo, ra.hi, ra.step, rd.lo, rd.hi, rd.step};
  uint64_t seed = seed_flag ? *seed_flag : pf.seed.value_or(0);
  auto cells = scan_phase_diagram(grid, pf.params, verify_restarts, seed);

  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << "a,d,region_label,n_minima_closed_form";
  if (verify_restarts > 0) f << ",n_minima_numeric";
  f << "\r\n";
  for (const auto& cell : cells) {
    f << fmt12(cell.a) << "," << fmt12(cell.d) << "," << csv_field(cell.label) << ","
      << cell.n_minima_closed;
    if (verify_restarts > 0) f << "," << cell.n_minima_numeric;
    f << "\r\n";
  }
  out << "scanned " << cells.size() << " cells -> " << out_path << "\n";
  return 0;
}

std::vector<CheckResult> selftest_checks() {
  std::vector<CheckResult> checks;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  };

  // group layer
  const auto& group = IcosahedralGroup::instance();
  add("group closure has 60 elements", group.size() == 60);
  add("conjugacy class sizes are (1,12,12,15,20)",
      group.class_sizes() == std::array<int, 5>{1, 12, 12, 15, 20});
  for (auto name : all_subgroup_names()) {
    bool ok = true;
    std::string detail;
    try {
      ok = make_subgroup(name).order() == subgroup_order(name);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    add("subgroup " + subgroup_label(name) + " has order " +
            std::to_string(subgroup_order(name)) + " and valid relations",
        ok, detail);
  }

  // characters
  add("character table rows are orthonormal", CharacterTable::instance().rows_orthonormal());
  std::array<Q5Matrix, 5> reps;
  for (int cidx = 0; cidx < 5; ++cidx)
    reps[cidx] = perm_to_matrix(group.class_representative(cidx));
  auto chi = character_of(reps);
  std::array<Q5Scalar, 5> expect_chi = {12, 2, 2, 0, 0};
  add("face representation character is (12,2,2,0,0)", chi == expect_chi);
  bool mult_ok = false;
  try {
    mult_ok = decompose_character(chi) == std::array<int, 5>{1, 1, 1, 0, 1};
  } catch (const std::exception&) {
  }
  add("face representation decomposes as rho1+rho2+rho3+rho5", mult_ok);

  for (const auto& c : validate_block_structure()) checks.push_back(c);
  for (const auto& c : verify_block_invariants()) checks.push_back(c);

  // invariant dimensions
  const int want_dim[3][4] = {{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 2, 2}};
  const int irreps3[3] = {2, 3, 5};
  for (int r = 0; r < 3; ++r)
    for (int k = 1; k <= 4; ++k)
      add("dim of degree-" + std::to_string(k) + " invariants of rho" +
              std::to_string(irreps3[r]) + " is " + std::to_string(want_dim[r][k - 1]),
          invariant_basis(irreps3[r], k).dimension() == want_dim[r][k - 1]);

  // energy layer at a sample parameter point
  EnergyParams sample = EnergyParams::from_rationals(
      {Rational(6), Rational(20), Rational(30), Rational(120), Rational(1), Rational(1),
       Rational(1), Rational(1), Rational(1)});
  bool spectrum_ok = true;
  for (const auto& c : check_origin_spectrum(sample)) spectrum_ok = spectrum_ok && c.pass;
  add("origin Hessian spectrum matches (a/6, b/10 x3, c/10 x3, d/30 x5)", spectrum_ok);

  EnergyParams branchy = EnergyParams::from_rationals(
      {Rational(-8), Rational(1), Rational(1), Rational(-1), Rational(1), Rational(1),
       Rational(1), Rational(3), Rational(1)});
  CompiledEnergy ce(branchy);
  auto rep = check_equivariance(ce, 4, 20240803);
  add("gradient is equivariant on samples (tol 1e-9)", rep.pass(),
      "max deviation " + fmt12(rep.max_gradient_deviation));

  auto branches = branch_solutions(branchy);
  for (const auto& b : branches) {
    if (!b.exists) continue;
    double gn = max_abs(ce.gradient(b.coords));
    add("closed-form " + branch_label(b.id) + " point is stationary (|grad| <= 1e-10)",
        gn <= 1e-10, "grad " + fmt12(gn));
  }
  for (BranchId id : {BranchId::icosahedral, BranchId::d10_first, BranchId::d10_second,
                      BranchId::d6_first, BranchId::d6_second}) {
    bool ok = false;
    std::string detail;
    try {
      ok = branch_is_exactly_stationary(id, branchy);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    add("closed-form " + branch_label(id) + " solves the restricted system exactly", ok,
        detail);
  }

  // orbit counts
  auto find_branch = [&](BranchId id) {
    for (const auto& b : branches)
      if (b.id == id) return b;
    throw std::logic_error("missing branch");
  };
  add("icosahedral orbit has 1 point",
      orbit(find_branch(BranchId::icosahedral).coords).size() == 1);
  add("D10 orbit has 6 points", orbit(find_branch(BranchId::d10_first).coords).size() == 6);
  add("D6 orbit has 10 points", orbit(find_branch(BranchId::d6_first).coords).size() == 10);

  return checks;
}

int cmd_selftest(std::ostream& out) {
  auto checks = selftest_checks();
  int failures = print_checks(checks, out);
  out << checks.size() - failures << "/" << checks.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"icosahedral Ginzburg-Landau capsid energy toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string params_path;
  bool dump_p = false, dump_energy = false, json_flag = false;
  int irrep = 5, degree = 4, starts = 100, verify_restarts = 0;
  std::optional<uint64_t> seed_flag;
  std::string a_range, d_range, out_path;

  auto* sub_group = app.add_subcommand("group", "dump the 60 rotations with classes");
  sub_group->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sub_irreps = app.add_subcommand("irreps", "validate the block decomposition");
  sub_irreps->require_subcommand(1);
  auto* sub_irreps_validate =
      sub_irreps->add_subcommand("validate", "run the canonical-basis validation report");
  sub_irreps_validate->add_flag("--dump-P", dump_p, "print P and P^-1 exactly");

  auto* sub_inv = app.add_subcommand("invariants", "print an invariant basis");
  sub_inv->add_option("--irrep", irrep, "irrep id (1, 2, 3 or 5)")
      ->check(CLI::IsMember({1, 2, 3, 5}));
  sub_inv->add_option("--degree", degree, "polynomial degree")->check(CLI::Range(1, 8));
  sub_inv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sub_energy = app.add_subcommand("energy", "inspect the energy at given coefficients");
  sub_energy->add_option("--params", params_path, "key=value coefficient file")->required();
  sub_energy->add_flag("--dump", dump_energy, "print the symbolic energy");

  auto* sub_branches = app.add_subcommand("branches", "closed-form branch report");
  sub_branches->add_option("--params", params_path)->required();
  sub_branches->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  sub_branches->add_flag("--json", json_flag, "shorthand for --format json");

  auto* sub_min = app.add_subcommand("minimize", "random-restart minimum search");
  sub_min->add_option("--params", params_path)->required();
  sub_min->add_option("--starts", starts)->check(CLI::PositiveNumber);
  sub_min->add_option("--seed", seed_flag);
  sub_min->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  sub_min->add_flag("--json", json_flag, "shorthand for --format json");

  auto* sub_scan = app.add_subcommand("scan", "(a, d) phase-diagram scan to CSV");
  sub_scan->add_option("--params", params_path)->required();
  sub_scan->add_option("--a-range", a_range, "lo:hi:step")->required();
  sub_scan->add_option("--d-range", d_range, "lo:hi:step")->required();
  sub_scan->add_option("--out", out_path, "CSV output path")->required();
  sub_scan->add_option("--verify-restarts", verify_restarts,
                       "also count numeric minima with this many starts per cell");
  sub_scan->add_option("--seed", seed_flag);

  app.add_subcommand("selftest", "run the full validation suite");

  std::vector<const char*> argv;
  argv.push_back("icoflux");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (json_flag) format = "json";

  try {
    if (sub_group->parsed()) return cmd_group_dump(format, out);
    if (sub_irreps->parsed()) return cmd_irreps_validate(dump_p, out);
    if (sub_inv->parsed()) return cmd_invariants(irrep, degree, format, out);
    if (sub_energy->parsed()) return cmd_energy(params_path, dump_energy, out);
    if (sub_branches->parsed()) return cmd_branches(params_path, format, out);
    if (sub_min->parsed()) return cmd_minimize(params_path, starts, seed_flag, format, out);
    if (sub_scan->parsed())
      return cmd_scan(params_path, a_range, d_range, out_path, verify_restarts,
                      seed_flag, out);
    return cmd_selftest(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace icoflux
