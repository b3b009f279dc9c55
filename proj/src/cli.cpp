#include "gcakit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>

#include "gcakit/canonical.hpp"
#include "gcakit/errors.hpp"
#include "gcakit/io.hpp"
#include "gcakit/lmatrix.hpp"
#include "gcakit/magnetic.hpp"
#include "gcakit/projective.hpp"
#include "gcakit/repbuilder.hpp"
#include "gcakit/schwinger.hpp"
#include "gcakit/skewnormal.hpp"
#include "gcakit/wigner.hpp"

namespace gcakit::cli {

namespace {

using io::Json;

struct Options {
  bool pretty = false;
  std::string out_path;
  std::optional<double> tol;
  std::optional<std::int64_t> nhat;
  std::uint64_t seed = 1;

  // --tol, then GCAKIT_TOL, then the command's own default.
  double tolerance(double fallback) const {
    if (tol) return *tol;
    if (std::getenv("GCAKIT_TOL") != nullptr) return default_tolerance();
    return fallback;
  }
};

struct Outcome {
  Json doc;
  bool pass = true;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const char* family_name(Family f) {
  switch (f) {
    case Family::Clifford:
      return "clifford";
    case Family::Ordered:
      return "ordered";
    case Family::General:
      break;
  }
  return "general";
}

Family family_from(const std::string& name) {
  if (name == "clifford") return Family::Clifford;
  if (name == "ordered") return Family::Ordered;
  if (name == "general") return Family::General;
  malformed("unknown family \"" + name + "\"");
}

Json spec_json(const GcaSpec& spec) {
  Json j;
  j["nhat"] = spec.t().nhat();
  j["t"] = io::to_json(spec.t().entries());
  j["orders"] = spec.orders();
  return j;
}

GcaSpec spec_from_json(const Json& j, std::optional<std::int64_t> nhat_override) {
  if (!j.is_object() || !j.contains("t")) malformed("spec needs a \"t\" matrix");
  std::int64_t nhat = 0;
  if (nhat_override) {
    nhat = *nhat_override;
  } else if (j.contains("nhat")) {
    nhat = j["nhat"].get<std::int64_t>();
  } else {
    malformed("spec needs \"nhat\" or --nhat");
  }
  const TMatrix t = validate_tmatrix(io::int_matrix_from_json(j["t"]), nhat);
  std::vector<std::int64_t> orders(static_cast<std::size_t>(t.n()), nhat);
  if (j.contains("orders")) orders = j["orders"].get<std::vector<std::int64_t>>();
  return GcaSpec(t, orders);
}

Json rep_json(const Representation& rep) {
  Json j;
  j["kind"] = "representation";
  j["dim"] = rep.dim;
  j["family"] = family_name(rep.family);
  j["spec"] = spec_json(rep.spec);
  Json mu = Json::array();
  for (const auto& p : rep.mu) mu.push_back(io::to_json(p));
  j["mu"] = std::move(mu);
  Json gens = Json::array();
  for (const auto& g : rep.gens) gens.push_back(io::to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

Outcome rep_outcome(const char* command, const Representation& rep) {
  Outcome o;
  o.doc["command"] = command;
  const Json body = rep_json(rep);
  for (auto it = body.begin(); it != body.end(); ++it) o.doc[it.key()] = it.value();
  const auto report = verify_gca(rep);
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Representation rep_from_json(const Json& j, const Options& opt) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("generators")) {
    malformed("representation needs \"spec\" and \"generators\"");
  }
  GcaSpec spec = spec_from_json(j["spec"], opt.nhat);
  std::vector<MonomialMatrix> gens;
  for (const auto& g : j["generators"]) gens.push_back(io::monomial_from_json(g));
  if (gens.size() != static_cast<std::size_t>(spec.n())) malformed("generator count differs from the size of t");
  const std::size_t dim = gens.empty() ? 1 : gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "generators have different dimensions");
  }
  std::vector<Phase> mu(gens.size(), Phase::one());
  if (j.contains("mu")) {
    mu.clear();
    for (const auto& p : j["mu"]) mu.push_back(io::phase_from_json(p));
  }
  const Family family = j.contains("family") ? family_from(j["family"].get<std::string>()) : Family::General;
  return Representation{dim, std::move(gens), std::move(spec), std::move(mu), family};
}

// ---- subcommands ----

Outcome cmd_snf(const std::string& input, const Options& opt) {
  const Json j = io::load(input);
  const Json spec = j.is_array() ? Json{{"t", j}} : j;
  std::int64_t nhat = 0;
  if (opt.nhat) {
    nhat = *opt.nhat;
  } else if (spec.contains("nhat")) {
    nhat = spec["nhat"].get<std::int64_t>();
  } else {
    malformed("snf needs \"nhat\" or --nhat");
  }
  if (!spec.contains("t")) malformed("snf needs a \"t\" matrix");
  const TMatrix t = validate_tmatrix(io::int_matrix_from_json(spec["t"]), nhat);
  const auto form = skew_normal_form(t);
  const auto report = verify_congruence(t, form);
  Outcome o;
  o.doc["command"] = "snf";
  o.doc["n"] = form.n;
  o.doc["nhat"] = form.nhat;
  o.doc["s"] = form.s;
  o.doc["t_inv"] = form.t_inv;
  o.doc["block_orders"] = form.block_orders();
  o.doc["normal_form"] = io::to_json(form.normal_form());
  o.doc["u"] = io::to_json(form.u);
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_projrep(const std::string& input) {
  const Json j = io::load(input);
  if (!j.is_object() || !j.contains("orders")) malformed("factor-set file needs \"orders\"");
  const auto orders = j["orders"].get<std::vector<std::int64_t>>();
  std::map<std::pair<GroupElement, GroupElement>, Phase> table;
  if (j.contains("table")) {
    for (const auto& e : j["table"]) {
      if (!e.contains("g") || !e.contains("h") || !e.contains("num") || !e.contains("den")) {
        malformed("factor-set entries need g, h, num and den");
      }
      table[{e["g"].get<GroupElement>(), e["h"].get<GroupElement>()}] =
          Phase(e["num"].get<std::int64_t>(), e["den"].get<std::int64_t>());
    }
  }
  const FactorSet fs(orders, table);
  const auto rep = projective_rep(fs);
  Outcome o;
  o.doc["command"] = "projrep";
  o.doc["orders"] = orders;
  o.doc["dim"] = rep.gca.dim;
  Json elements = Json::array();
  for (std::size_t g = 0; g < rep.group.size(); ++g) {
    Json e;
    e["g"] = rep.group.element(g);
    e["coefficient"] = io::to_json(rep.phi_coeffs[g]);
    e["matrix"] = io::to_json(rep.d[g]);
    elements.push_back(std::move(e));
  }
  o.doc["elements"] = std::move(elements);
  Json comm = Json::array();
  for (const auto& row : rep.commutators) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(io::to_json(p));
    comm.push_back(std::move(r));
  }
  o.doc["commutators"] = std::move(comm);
  o.doc["gca"] = rep_json(rep.gca);
  o.doc["report"] = io::to_json(rep.report);
  o.pass = rep.report.overall();
  return o;
}

LSpec lspec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda")) malformed("L-matrix input needs \"lambda\"");
  std::vector<Complex> lambda;
  for (const auto& x : j["lambda"]) lambda.push_back(io::complex_from_json(x));
  if (lambda.empty()) malformed("lambda must not be empty");
  const std::string family = j.value("family", "clifford");
  const int n = static_cast<int>(lambda.size());
  if (family == "clifford") return LSpec{lambda, clifford_generators(n)};
  if (family == "ordered") {
    if (!j.contains("order")) malformed("ordered family needs \"order\"");
    return LSpec{lambda, ordered_gca_generators(n, j["order"].get<std::int64_t>())};
  }
  malformed("family must be \"clifford\" or \"ordered\"");
}

Json lambda_json(const std::vector<Complex>& lambda) {
  Json out = Json::array();
  for (const auto& z : lambda) out.push_back(io::complex_to_json(z));
  return out;
}

Outcome cmd_lmat(const std::string& input, const Options& opt) {
  const LSpec spec = lspec_from_json(io::load(input));
  const auto power = nth_power_check(spec);
  const double tol = opt.tolerance(1e-9);
  VerificationReport report;
  report.add("power", power.deviation <= tol,
             "relative max|L^N - (sum lambda^N) I| = " + format_deviation(power.deviation), power.deviation);
  Outcome o;
  o.doc["command"] = "lmat";
  o.doc["family"] = family_name(spec.rep.family);
  o.doc["order"] = power.order;
  o.doc["n"] = spec.lambda.size();
  o.doc["lambda"] = lambda_json(spec.lambda);
  o.doc["matrix"] = io::to_json(l_matrix(spec));
  o.doc["power_scalar"] = io::complex_to_json(power.scalar);
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_ldiag(const std::string& input, const Options& opt) {
  const LSpec spec = lspec_from_json(io::load(input));
  const auto d = diagonalize_l(spec);
  VerificationReport report = d.report;
  if (opt.tol || std::getenv("GCAKIT_TOL") != nullptr) {
    const double tol = opt.tolerance(1e-10);
    VerificationReport adjusted;
    for (const auto& c : report.checks()) adjusted.add(c.name, c.deviation < tol, c.detail, c.deviation);
    report = adjusted;
  }
  Outcome o;
  o.doc["command"] = "ldiag";
  o.doc["lambda"] = lambda_json(spec.lambda);
  o.doc["lambda_norm"] = d.lambda_norm;
  o.doc["fallback"] = d.fallback;
  o.doc["axis"] = d.axis;
  o.doc["u"] = io::to_json(d.u);
  o.doc["eig"] = io::to_json(d.eig);
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_decompose(const std::string& input, const Options& opt) {
  Json j = io::load(input);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  const DenseMatrix m = io::dense_from_json(j);
  const double tol = opt.tolerance(1e-10);
  const auto mu = schwinger_coeffs(m);
  const auto dec = ramakrishnan_decomposition(m, tol);
  VerificationReport report;
  report.add("schwinger-reconstruction", mu.reconstruction_error < tol,
             "max|M - sum mu A^k B^l| = " + format_deviation(mu.reconstruction_error), mu.reconstruction_error);
  report.append(dec.report);
  Outcome o;
  o.doc["command"] = "decompose";
  o.doc["n"] = m.rows();
  o.doc["mu"] = io::to_json(mu.mu);
  o.doc["c"] = io::to_json(dec.c);
  o.doc["r"] = io::to_json(dec.r);
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_wigner(const std::string& mode, const std::string& input, const Options& opt) {
  const Json j = io::load(input);
  const double tol = opt.tolerance(1e-9);
  Outcome o;
  VerificationReport report;
  if (mode == "fwd") {
    const Json rows = j.is_object() ? j.at("w") : j;
    const RealMatrix w = io::real_matrix_from_json(rows);
    if (w.rows() != w.cols() || w.rows() % 2 == 0) {
      throw Error(ErrorCode::DimensionMismatch, "Wigner table must be square of odd size");
    }
    const WignerTable table{w.rows() / 2, w};
    const DenseMatrix h = wigner_forward(table);
    const double herm = max_abs_diff(h, h.adjoint());
    report.add("hermitian", herm <= tol, "max|H - H^dag| = " + format_deviation(herm), herm);
    const double trip = (wigner_inverse(h).table.w - w).cwiseAbs().maxCoeff();
    report.add("round-trip", trip <= tol, "max|inverse(H) - w| = " + format_deviation(trip), trip);
    o.doc["command"] = "wigner-fwd";
    o.doc["nu"] = table.nu;
    o.doc["h"] = io::to_json(h);
  } else {
    const Json doc = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    const DenseMatrix h = io::dense_from_json(doc);
    const auto inv = wigner_inverse(h);
    report.add("real", inv.imag_residue <= tol, "largest imaginary part " + format_deviation(inv.imag_residue),
               inv.imag_residue);
    const double trip = max_abs_diff(wigner_forward(inv.table), h);
    report.add("round-trip", trip <= tol, "max|forward(w) - H| = " + format_deviation(trip), trip);
    o.doc["command"] = "wigner-inv";
    o.doc["nu"] = inv.table.nu;
    o.doc["w"] = io::to_json(inv.table.w);
    o.doc["imag_residue"] = inv.imag_residue;
  }
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_canonical(const std::vector<std::int64_t>& v, const Options& opt) {
  const CanonicalParams p(v[0], v[1], v[2], v[3], v[4]);
  const auto pair = canonical_pair(p);
  VerificationReport report = pair.report;
  Outcome o;
  o.doc["command"] = "canonical";
  o.doc["params"] = Json{{"k", p.k()}, {"l", p.l()}, {"m", p.m()}, {"n", p.n()}, {"order", p.order()}};
  o.doc["a"] = io::to_json(pair.a);
  o.doc["b"] = io::to_json(pair.b);
  try {
    const auto s = canonical_intertwiner(p, opt.tolerance(1e-9));
    report.append(s.report);
    o.doc["supported"] = true;
    o.doc["s"] = io::to_json(s.s);
    o.doc["zeta_a"] = io::complex_to_json(s.zeta_a);
    o.doc["zeta_b"] = io::complex_to_json(s.zeta_b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedTransform) throw;
    report.add("intertwiner", false, e.what());
    o.doc["supported"] = false;
    o.doc["s"] = nullptr;
  }
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Flux flux_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) malformed(std::string("flux file needs \"") + key + "\"");
  const Json& f = j[key];
  if (f.is_array() && f.size() == 2) return Flux{f[0].get<std::int64_t>(), f[1].get<std::int64_t>()};
  if (f.is_number()) {
    return MagneticLattice::from_real(f.get<double>(), 0.0, 0.0).fluxes()[0];
  }
  malformed(std::string("flux \"") + key + "\" must be [p, q] or a number");
}

Outcome cmd_magnetic(const std::string& input) {
  const Json j = io::load(input);
  if (!j.is_object()) malformed("flux file must be an object");
  const MagneticLattice lat(flux_from_json(j, "f12"), flux_from_json(j, "f13"), flux_from_json(j, "f23"));
  const auto rep = magnetic_translation_rep(lat);
  Outcome o = rep_outcome("magnetic", rep);
  Json fl;
  const char* names[] = {"f12", "f13", "f23"};
  for (std::size_t i = 0; i < 3; ++i) fl[names[i]] = {lat.fluxes()[i].p, lat.fluxes()[i].q};
  o.doc["fluxes"] = fl;
  return o;
}

Outcome cmd_catalog(const std::string& name) {
  const auto set = catalog(name);
  VerificationReport report;
  Json mats = Json::array();
  for (const auto& m : set) {
    const DenseMatrix d = m.matrix.to_dense();
    const double dev = max_abs_diff(d.adjoint() * d, DenseMatrix::Identity(d.rows(), d.cols()));
    report.add("unitary(" + m.name + ")", dev == 0.0, "", dev);
    mats.push_back(Json{{"name", m.name}, {"matrix", io::to_json(m.matrix)}});
  }
  Outcome o;
  o.doc["command"] = "catalog";
  o.doc["name"] = name;
  o.doc["matrices"] = std::move(mats);
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_verify(const std::string& input, const Options& opt) {
  const Representation rep = rep_from_json(io::load(input), opt);
  const auto report = verify_gca(rep);
  Outcome o;
  o.doc["command"] = "verify";
  o.doc["dim"] = rep.dim;
  o.doc["n"] = rep.gens.size();
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

Outcome cmd_selftest(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto random_t = [&](int n, std::int64_t nhat) {
    IntMatrix t = IntMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        t(a, b) = uniform(-nhat, nhat);
        t(b, a) = -t(a, b);
      }
    }
    return validate_tmatrix(t, nhat);
  };
  VerificationReport report;
  auto tally = [&](const std::string& name, int trials, const std::function<bool()>& trial) {
    int failures = 0;
    for (int i = 0; i < trials; ++i) failures += trial() ? 0 : 1;
    report.add(name, failures == 0, std::to_string(trials - failures) + "/" + std::to_string(trials) + " passed",
               failures);
  };
  tally("skew-normal-form", 50, [&] {
    const TMatrix t = random_t(static_cast<int>(uniform(1, 6)), uniform(2, 12));
    return verify_congruence(t, skew_normal_form(t)).overall();
  });
  tally("general-builder", 20, [&] {
    const std::int64_t nhat = uniform(2, 8);
    const TMatrix t = random_t(static_cast<int>(uniform(1, 4)), nhat);
    return verify_gca(build_representation(GcaSpec(t, std::vector<std::int64_t>(static_cast<std::size_t>(t.n()), nhat))))
        .overall();
  });
  tally("clifford", 7, [&, n = 0]() mutable { return verify_gca(clifford_generators(++n)).overall(); });
  std::normal_distribution<double> gauss;
  tally("l-matrix", 10, [&] {
    std::vector<Complex> lambda;
    for (int j = 0; j < 5; ++j) lambda.emplace_back(gauss(rng), gauss(rng));
    return nth_power_check(LSpec{lambda, ordered_gca_generators(5, 3)}).pass;
  });
  tally("decomposition", 10, [&] {
    DenseMatrix m(4, 4);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = Complex(gauss(rng), gauss(rng));
    return ramakrishnan_decomposition(m).report.overall();
  });
  tally("wigner", 10, [&] {
    WignerTable table{2, RealMatrix(5, 5)};
    for (Eigen::Index i = 0; i < table.w.size(); ++i) table.w(i) = gauss(rng);
    return (wigner_inverse(wigner_forward(table)).table.w - table.w).cwiseAbs().maxCoeff() < 1e-9;
  });
  Outcome o;
  o.doc["command"] = "selftest";
  o.doc["seed"] = opt.seed;
  o.doc["report"] = io::to_json(report);
  o.pass = report.overall();
  return o;
}

void write_error(std::ostream& err, const std::string& code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  err << io::emit(j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"gcakit: matrix representations of generalized Clifford algebras"};
  app.name("gcakit");
  app.footer(
      "Indices are 0-based everywhere. Wigner tables are square arrays of odd size 2nu+1;\n"
      "row r, column c hold w_kl for k = r - nu, l = c - nu. Inputs are JSON files, or\n"
      "inline JSON when the argument starts with '{' or '['.");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--pretty", opt.pretty, "Aligned text output instead of JSON");
  app.add_option("--out", opt.out_path, "Write the output to a file");
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Tolerance for floating-point checks")->check(CLI::PositiveNumber);
  std::int64_t nhat_value = 0;
  auto* nhat_opt = app.add_option("--nhat", nhat_value, "Modulus for snf, rep and verify inputs")->check(CLI::Range(2, 1 << 30));
  app.add_option("--seed", opt.seed, "Seed for selftest");

  std::string input;
  std::string mode;
  std::string name;
  int n_arg = 0;
  std::int64_t order_arg = 0;
  std::vector<std::int64_t> canonical_args;

  auto* snf = app.add_subcommand("snf", "Skew-normal form of {t, nhat}");
  snf->add_option("input", input, "JSON file or inline JSON")->required();
  auto* rep = app.add_subcommand("rep", "Representation of {nhat, t, orders}");
  rep->add_option("input", input, "JSON file or inline JSON")->required();
  auto* cliff = app.add_subcommand("clifford", "Clifford generators");
  cliff->add_option("n", n_arg, "Generator count")->required()->check(CLI::Range(1, 20));
  auto* ord = app.add_subcommand("ordered", "Ordered generalized Clifford generators");
  ord->add_option("n", n_arg, "Generator count")->required()->check(CLI::Range(1, 20));
  ord->add_option("N", order_arg, "Order")->required()->check(CLI::Range(2, 1 << 20));
  auto* proj = app.add_subcommand("projrep", "Projective representation from a factor-set file");
  proj->add_option("input", input, "JSON file or inline JSON")->required();
  auto* lmat = app.add_subcommand("lmat", "L-matrix from {family, order, lambda}");
  lmat->add_option("input", input, "JSON file or inline JSON")->required();
  auto* ldiag = app.add_subcommand("ldiag", "Diagonalize a Clifford L-matrix");
  ldiag->add_option("input", input, "JSON file or inline JSON")->required();
  auto* dec = app.add_subcommand("decompose", "Clock-shift expansions of a square matrix");
  dec->add_option("input", input, "Matrix document")->required();
  auto* wig = app.add_subcommand("wigner", "Wigner table to matrix (fwd) or back (inv)");
  wig->add_option("mode", mode, "fwd or inv")->required()->check(CLI::IsMember({"fwd", "inv"}));
  wig->add_option("input", input, "Table {w} or matrix document")->required();
  auto* can = app.add_subcommand("canonical", "Canonical transformation k l m n N");
  can->add_option("params", canonical_args, "k l m n N")->required()->expected(5);
  auto* mag = app.add_subcommand("magnetic", "Magnetic translations from {f12, f13, f23}");
  mag->add_option("input", input, "JSON file or inline JSON")->required();
  auto* cat = app.add_subcommand("catalog", "Named matrix sets");
  cat->add_option("name", name, "pauli, quaternion, dirac or dirac_positive_energy")->required();
  auto* ver = app.add_subcommand("verify", "Verify a representation document");
  ver->add_option("input", input, "JSON file or inline JSON")->required();
  auto* self = app.add_subcommand("selftest", "Randomized self-checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return 2;
  }
  if (*tol_opt) opt.tol = tol_value;
  if (*nhat_opt) opt.nhat = nhat_value;

  Outcome outcome;
  try {
    if (*snf) {
      outcome = cmd_snf(input, opt);
    } else if (*rep) {
      outcome = rep_outcome("rep", build_representation(spec_from_json(io::load(input), opt.nhat)));
    } else if (*cliff) {
      outcome = rep_outcome("clifford", clifford_generators(n_arg));
    } else if (*ord) {
      outcome = rep_outcome("ordered", ordered_gca_generators(n_arg, order_arg));
    } else if (*proj) {
      outcome = cmd_projrep(input);
    } else if (*lmat) {
      outcome = cmd_lmat(input, opt);
    } else if (*ldiag) {
      outcome = cmd_ldiag(input, opt);
    } else if (*dec) {
      outcome = cmd_decompose(input, opt);
    } else if (*wig) {
      outcome = cmd_wigner(mode, input, opt);
    } else if (*can) {
      outcome = cmd_canonical(canonical_args, opt);
    } else if (*mag) {
      outcome = cmd_magnetic(input);
    } else if (*cat) {
      outcome = cmd_catalog(name);
    } else if (*ver) {
      outcome = cmd_verify(input, opt);
    } else if (*self) {
      outcome = cmd_selftest(opt);
    }
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.code())), e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    write_error(err, "InvalidInput", e.what());
    return 2;
  }

  const std::string text = opt.pretty ? io::render_text(outcome.doc) : io::emit(outcome.doc);
  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      write_error(err, "IOError", "cannot write \"" + opt.out_path + "\"");
      return 2;
    }
  }
  return outcome.pass ? 0 : 1;
}

}  // namespace gcakit::cli
