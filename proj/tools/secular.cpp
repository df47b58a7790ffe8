// Batch front end: one verb per run, JSON (or CSV for trajectories) out.

#include <secular/determinant.hpp>
#include <secular/error.hpp>
#include <secular/factor.hpp>
#include <secular/invariants.hpp>
#include <secular/io.hpp>
#include <secular/oscillate.hpp>
#include <secular/spectral.hpp>
#include <secular/weierstrass.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace {

using namespace secular;
using io::Json;

struct Options {
  std::string input;
  std::string output;
  double tolerance = kTheoremTolerance;
  std::string width = "1e-30";
  std::string path = "auto";
  double t = 1.0;
  double t_max = -1.0;
  int t_steps = -1;
};

Rat parse_width(const std::string& text) {
  Rat w = parse_rat(text);
  if (w <= 0) throw PreconditionError("--width must be positive");
  return w;
}

Json with_header(Json doc, const char* verb, ArithPath path, const std::string& algorithm,
                 const std::string& source) {
  doc["verb"] = verb;
  doc["path"] = to_string(path);
  doc["provenance"] = io::provenance(algorithm, source);
  return doc;
}

Json factors_json(const std::vector<PolyPower>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back({{"factor", io::to_json(f.factor)}, {"exponent", f.exponent}});
  return out;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

// -- verbs -------------------------------------------------------------------

Json cmd_charpoly(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  const UPoly f = characteristic_polynomial(p);
  if (f.is_zero()) throw SingularPencilError();
  Json doc{{"polynomial", io::to_json(f)}, {"squarefree", factors_json(squarefree_decompose(f))},
           {"orientation", p.orientation == Orientation::kSAMinusB ? "sA-B" : "A-sB"}};
  return with_header(doc, "charpoly", ArithPath::kExact,
                     "determinant of the characteristic matrix by evaluation and interpolation",
                     "lagrange-1766");
}

Json cmd_roots(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  const auto roots = char_roots(p, parse_width(o.width));
  Json list = Json::array();
  ArithPath path = ArithPath::kExact;
  for (const auto& r : roots) {
    Json j = io::to_json(r);
    j["path"] = r.exact ? "exact" : "floating";
    if (!r.exact) path = ArithPath::kFloating;
    list.push_back(j);
  }
  Json doc{{"roots", list}, {"real_root_count", total_multiplicity(roots)}, {"degree", characteristic_polynomial(p).degree()}};
  return with_header(doc, "roots", path, "Sturm sequences with exact bisection", "sturm-1829");
}

Json cmd_eigvec(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  const SpectralDecomp dec = decompose(p, parse_path_request(o.path));
  Json list = Json::array();
  ArithPath path = ArithPath::kExact;
  for (const auto& rv : dec.roots) {
    Json j{{"root", io::to_json(rv.root)}, {"path", to_string(rv.path)}};
    Json vecs = Json::array();
    if (rv.path == ArithPath::kExact) {
      for (const auto& v : rv.exact) vecs.push_back(io::to_json(v));
      Json norms = Json::array();
      for (const auto& n : rv.squared_norms) norms.push_back(format_rat(n));
      j["squared_norms"] = norms;
    } else {
      path = ArithPath::kFloating;
      for (const auto& v : rv.numeric) vecs.push_back(io::to_json(v));
    }
    j["vectors"] = vecs;
    list.push_back(j);
  }
  const auto lead = cauchy_orthogonality(dec, p.lead());
  const auto tail = cauchy_orthogonality(dec, p.tail());
  auto report = [](const OrthogonalityReport& r) {
    return Json{{"pass", r.pass}, {"path", to_string(r.path)}, {"max_violation", r.max_violation},
                {"pairs_checked", r.pairs_checked}};
  };
  Json doc{{"roots", list}, {"orthogonality", {{"lead", report(lead)}, {"tail", report(tail)}}}};
  return with_header(doc, "eigvec", path, "adjugate columns and nullspaces of the characteristic matrix",
                     "cauchy-1829");
}

Json cmd_invariant_factors(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  const auto chain = minor_gcd_chain(p.characteristic_matrix());
  const auto inv = invariant_factors(chain);
  Json deltas = Json::array(), factors = Json::array();
  for (const auto& d : chain.deltas) deltas.push_back(io::to_json(d));
  for (const auto& f : inv.factors) factors.push_back(io::to_json(f));
  return with_header(Json{{"minor_gcds", deltas}, {"invariant_factors", factors}}, "invariant-factors",
                     ArithPath::kExact, "gcd of all k-by-k minors", "kronecker-1874");
}

Json cmd_elementary_divisors(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  const auto inv = invariant_factors(minor_gcd_chain(p.characteristic_matrix()));
  const auto ed = elementary_divisors(inv);
  return with_header(Json{{"elementary_divisors", factors_json(ed.divisors)}}, "elementary-divisors",
                     ArithPath::kExact, "Kronecker factorization of the invariant factors", "kronecker-1874");
}

Json cmd_diagonalizable(const Options& o) {
  const Pencil p = io::pencil_from_json(io::read_json_file(o.input));
  const auto report = is_diagonalizable(p);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back({{"factor", io::to_json(w.factor)},
                         {"multiplicity", w.multiplicity},
                         {"order_in_minors", w.order_in_minors},
                         {"annihilates", w.annihilates}});
  Json doc{{"diagonalizable", report.diagonalizable},
           {"witnesses", witnesses},
           {"elementary_divisors", factors_json(report.divisors.divisors)}};
  return with_header(doc, "diagonalizable", ArithPath::kExact,
                     "multiple roots must divide every (n-1)-minor to order multiplicity - 1", "jordan-1871");
}

QMatrix read_matrix(const std::string& path) {
  const Json doc = io::read_json_file(path);
  return io::matrix_from_json(doc.is_object() && doc.contains("M") ? doc.at("M") : doc);
}

Json cmd_inertia(const Options& o) {
  const auto r = inertia(read_matrix(o.input));
  Json seq = Json::array();
  for (const auto& d : r.minor_sequence) seq.push_back(format_rat(d));
  Json doc{{"positives", r.positives},
           {"negatives", r.negatives},
           {"zeros", r.zeros},
           {"method", r.method == InertiaMethod::kMinorFormula ? "minor-sequence" : "congruence"},
           {"minor_sequence", seq}};
  return with_header(doc, "inertia", ArithPath::kExact, "sign permanences of the leading-minor sequence",
                     "darboux-1874");
}

Json cmd_darboux_steps(const Options& o) {
  Json steps = Json::array();
  for (const auto& s : darboux_signature_steps(read_matrix(o.input)))
    steps.push_back({{"root", io::to_json(s.root)}, {"jump", s.jump}});
  return with_header(Json{{"steps", steps}}, "darboux-steps", ArithPath::kExact,
                     "change of the positive-square count across each eigenvalue", "darboux-1874");
}

Json cmd_weierstrass(const Options& o) {
  const QuadPair pair = io::quad_pair_from_json(io::read_json_file(o.input));
  const auto circ = remarkable_circumstance_check(pair);
  const auto dec = theta_components(pair, parse_path_request(o.path));
  const auto check = verify_theorem(dec, pair, o.tolerance);
  Json comps = Json::array();
  for (const auto& c : dec.components) {
    Json j{{"root", io::to_json(c.root)}, {"multiplicity", c.multiplicity}, {"path", to_string(c.path)}};
    if (c.path == ArithPath::kExact) {
      j["theta"] = io::to_json(c.theta);
      j["residue"] = io::to_json(c.residue);
    } else {
      j["theta"] = io::to_json(c.theta_numeric);
      j["residue"] = io::to_json(c.residue_numeric);
    }
    comps.push_back(j);
  }
  Json circ_j = Json::array();
  for (const auto& e : circ.roots)
    circ_j.push_back({{"root", io::to_json(e.root)},
                      {"multiplicity", e.multiplicity},
                      {"divisor", io::to_json(e.divisor)},
                      {"min_order", e.min_order},
                      {"divisible", e.divisible}});
  Json verify{{"pass", check.pass},
              {"path", to_string(check.path)},
              {"phi_residual", check.phi_residual},
              {"psi_residual", check.psi_residual},
              {"ranks_ok", check.ranks_ok},
              {"semidefinite_ok", check.semidefinite_ok},
              {"multiplicities_ok", check.multiplicities_ok}};
  Json doc{{"definiteness", to_string(pair.definiteness)},
           {"components", comps},
           {"circumstance", {{"pass", circ.pass}, {"roots", circ_j}}},
           {"verification", verify}};
  return with_header(doc, "weierstrass-reduce", dec.path(), "residues of adj(s Phi - Psi) / det(s Phi - Psi)",
                     "weierstrass-1858");
}

Json cmd_expm(const Options& o) {
  const QMatrix M = read_matrix(o.input);
  const auto projectors = spectral_projectors(M);
  Json list = Json::array();
  for (const auto& p : projectors)
    list.push_back({{"sigma", format_rat(p.sigma)},
                    {"multiplicity", p.multiplicity},
                    {"cofactor", io::to_json(p.cofactor)},
                    {"projector", io::to_json(p.projector)},
                    {"path", "exact"}});
  Json doc{{"t", o.t}, {"exp", io::to_json(expm_projectors(M, o.t))}, {"projectors", list}};
  return with_header(doc, "expm", ArithPath::kFloating, "spectral projectors from Bezout cofactors",
                     "bezout-identity");
}

Json jordan_json(const JordanSolution& sol) {
  Json blocks = Json::array();
  for (const auto& b : sol.blocks) {
    Json j{{"multiplicity", b.multiplicity},
           {"chain_lengths", b.chain_lengths},
           {"psi_degree", b.psi_degree()},
           {"conjugate_pair", b.conjugate_pair},
           {"path", to_string(b.path)}};
    Json coeffs = Json::array();
    if (b.path == ArithPath::kExact) {
      j["sigma"] = format_rat(b.sigma_exact);
      for (const auto& c : b.exact_coeffs) coeffs.push_back(io::to_json(c));
    } else {
      j["sigma"] = complex_json(b.sigma);
      for (const auto& c : b.coeffs) {
        Json v = Json::array();
        for (Eigen::Index i = 0; i < c.size(); ++i) v.push_back(complex_json(c(i)));
        coeffs.push_back(v);
      }
    }
    j["psi_coefficients"] = coeffs;
    blocks.push_back(j);
  }
  return Json{{"blocks", blocks}, {"exact_residual_ok", sol.exact_residual_ok}};
}

TimeGrid grid_from(const Options& o, TimeGrid g) {
  if (o.t_max >= 0) g.t_max = o.t_max;
  if (o.t_steps >= 0) g.steps = o.t_steps;
  return g;
}

Json modal_json(const ModalSolution& sol) {
  Json modes = Json::array();
  for (const auto& m : sol.modes)
    modes.push_back({{"K", io::to_json(m.K)},
                     {"omega", m.omega},
                     {"shape", io::to_json(m.shape)},
                     {"amplitude", m.amplitude},
                     {"phase", m.phase},
                     {"rigid", m.rigid},
                     {"drift_offset", m.drift_offset},
                     {"drift_rate", m.drift_rate}});
  return Json{{"modes", modes}, {"modal_bound", modal_bound(sol)}};
}

Json cmd_solve(const Options& o) {
  const Json in = io::read_json_file(o.input);
  const PathRequest request = parse_path_request(o.path);
  if (in.is_object() && in.contains("F")) {
    const UPoly F = io::poly_from_json(in.at("F"));
    std::vector<Rat> ic;
    for (const auto& x : in.at("ic")) ic.push_back(io::rat_from_json(x));
    const auto sol = scalar_residue_solve(F, ic);
    Json terms = Json::array();
    for (const auto& t : sol.terms)
      terms.push_back({{"root", complex_json(t.root)},
                       {"multiplicity", t.multiplicity},
                       {"alpha", t.alpha},
                       {"beta", t.beta},
                       {"cos_poly", t.cos_poly},
                       {"sin_poly", t.sin_poly}});
    return with_header(Json{{"method", "residues"}, {"terms", terms}}, "solve", ArithPath::kFloating,
                       "sum of residues of Phi(r) e^{rx} / F(r)", "cauchy-1826");
  }
  if (in.is_object() && in.contains("M")) {
    const QMatrix M = io::matrix_from_json(in.at("M"));
    QVector x0;
    for (const auto& x : in.at("x0")) x0.push_back(io::rat_from_json(x));
    const auto sol = solve_jordan(M, x0, request);
    TimeGrid grid = grid_from(o, TimeGrid{});
    Json doc = jordan_json(sol);
    doc["method"] = "jordan";
    doc["residual"] = jordan_residual(M, sol, grid);
    doc["residual_pass"] = doc["residual"].get<double>() <= 1e-6;
    return with_header(doc, "solve", sol.path, "generalized eigenspaces, e^{sigma t} psi(t) per block",
                       "jordan-1871");
  }
  const auto sc = io::scenario_from_json(in);
  try {
    const auto sol = solve_modal(sc.model, sc.ic);
    Json doc = modal_json(sol);
    doc["method"] = "modal";
    doc["model"] = to_string(sc.model.kind);
    return with_header(doc, "solve", ArithPath::kFloating, "B-orthogonal modal projection", "lagrange-1788");
  } catch (const PreconditionError&) {
    // not a definite symmetric system: integrate the first-order form
  }
  const QMatrix M = first_order_form(sc.model);
  QVector x0 = sc.ic.Y;
  x0.insert(x0.end(), sc.ic.V.begin(), sc.ic.V.end());
  const auto sol = solve_jordan(M, x0, request);
  Json doc = jordan_json(sol);
  doc["method"] = "jordan-first-order";
  doc["model"] = to_string(sc.model.kind);
  return with_header(doc, "solve", sol.path, "generalized eigenspaces of the first-order form", "jordan-1871");
}

Json cmd_classify(const Options& o) {
  const Json in = io::read_json_file(o.input);
  const MechModel model = in.contains("model") ? io::model_from_json(in.at("model")) : io::model_from_json(in);
  const auto v = classify_stability(model);
  Json roots = Json::array();
  for (const auto& r : v.roots) roots.push_back(io::to_json(r));
  Json doc{{"historical", {{"verdict", to_string(v.historical)}, {"rule", v.historical_rule}}},
           {"corrected", {{"verdict", to_string(v.corrected)}, {"rule", v.corrected_rule}}},
           {"agreement", v.agreement},
           {"roots_K", roots},
           {"nonreal_roots", v.nonreal_roots},
           {"model", to_string(model.kind)}};
  Json out = with_header(doc, "classify", ArithPath::kExact, "root trichotomy versus definiteness",
                         "lagrange-1766");
  out["provenance"]["corrected_source"] = "weierstrass-1858";
  return out;
}

std::string cmd_trajectory(const Options& o) {
  const auto sc = io::scenario_from_json(io::read_json_file(o.input));
  const TimeGrid grid = grid_from(o, sc.grid);
  try {
    return io::trajectory_csv(sample_trajectory(solve_modal(sc.model, sc.ic), grid));
  } catch (const PreconditionError&) {
  }
  QVector x0 = sc.ic.Y;
  x0.insert(x0.end(), sc.ic.V.begin(), sc.ic.V.end());
  Trajectory tr = sample_trajectory(solve_jordan(first_order_form(sc.model), x0, parse_path_request(o.path)), grid);
  const Eigen::MatrixXd y = tr.values.leftCols(static_cast<Eigen::Index>(sc.model.size()));
  tr.values = y;
  return io::trajectory_csv(tr);
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw ParseError("cannot write '" + o.output + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secular: exact and floating engine for matrix pencils and small oscillations"};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, std::pair<std::string, std::function<Json(const Options&)>>> verbs{
      {"charpoly", {"characteristic polynomial of a pencil or matrix", cmd_charpoly}},
      {"roots", {"real characteristic roots with multiplicities", cmd_roots}},
      {"eigvec", {"eigenvectors and orthogonality report", cmd_eigvec}},
      {"invariant-factors", {"minor-gcd chain and invariant factors", cmd_invariant_factors}},
      {"elementary-divisors", {"elementary divisors", cmd_elementary_divisors}},
      {"diagonalizable", {"diagonalizability test with witnesses", cmd_diagonalizable}},
      {"inertia", {"signature of a symmetric matrix", cmd_inertia}},
      {"darboux-steps", {"signature jumps across eigenvalues", cmd_darboux_steps}},
      {"weierstrass-reduce", {"simultaneous reduction of a quadratic pair", cmd_weierstrass}},
      {"expm", {"matrix exponential via spectral projectors", cmd_expm}},
      {"solve", {"solve a scenario, first-order system or scalar ODE", cmd_solve}},
      {"classify", {"historical and corrected stability verdicts", cmd_classify}},
  };
  for (const auto& [name, entry] : verbs) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--input,-i", opt.input, "input JSON document")->required();
    sub->add_option("--output,-o", opt.output, "output file (default stdout)");
    sub->add_option("--tolerance", opt.tolerance, "floating residual tolerance");
    sub->add_option("--width", opt.width, "root isolation width");
    sub->add_option("--path", opt.path, "arithmetic path: exact, float or auto");
    sub->add_option("--t", opt.t, "time for expm");
    sub->add_option("--t-max", opt.t_max, "end of the time grid");
    sub->add_option("--t-steps", opt.t_steps, "number of grid steps");
  }
  auto* traj = app.add_subcommand("trajectory", "sample a scenario on a time grid (CSV)");
  traj->add_option("--input,-i", opt.input, "scenario JSON")->required();
  traj->add_option("--output,-o", opt.output, "output file (default stdout)");
  traj->add_option("--path", opt.path, "arithmetic path: exact, float or auto");
  traj->add_option("--t-max", opt.t_max, "end of the time grid");
  traj->add_option("--t-steps", opt.t_steps, "number of grid steps");
  traj->add_option("--tolerance", opt.tolerance, "floating residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    parse_path_request(opt.path);
    if (traj->parsed()) {
      emit(opt, cmd_trajectory(opt));
      return 0;
    }
    for (const auto& [name, entry] : verbs)
      if (app.got_subcommand(name)) emit(opt, io::dump(entry.second(opt)));
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const PathUnavailableError& e) {
    std::cerr << "path unavailable: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
