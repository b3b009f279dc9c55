#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gcakit/canonical.hpp"
#include "gcakit/cli.hpp"
#include "gcakit/errors.hpp"
#include "gcakit/lmatrix.hpp"
#include "gcakit/magnetic.hpp"
#include "gcakit/projective.hpp"
#include "gcakit/repbuilder.hpp"
#include "gcakit/schwinger.hpp"
#include "gcakit/skewnormal.hpp"
#include "gcakit/wigner.hpp"

namespace py = pybind11;
using namespace gcakit;

namespace {

py::dict report_dict(const VerificationReport& r) {
  py::list checks;
  for (const auto& c : r.checks()) {
    py::dict item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    item["deviation"] = c.deviation;
    checks.append(item);
  }
  py::dict out;
  out["overall"] = r.overall();
  out["checks"] = checks;
  return out;
}

py::tuple phase_tuple(Phase p) { return py::make_tuple(p.num(), p.den()); }

py::dict rep_dict(const Representation& rep) {
  py::list gens;
  for (const auto& g : rep.gens) gens.append(g.to_dense());
  py::list mu;
  for (const auto& p : rep.mu) mu.append(phase_tuple(p));
  py::dict out;
  out["dim"] = rep.dim;
  out["generators"] = gens;
  out["mu"] = mu;
  out["nhat"] = rep.spec.t().nhat();
  out["t"] = rep.spec.t().entries();
  out["orders"] = rep.spec.orders();
  out["report"] = report_dict(verify_gca(rep));
  return out;
}

Representation family_rep(const std::string& family, int n, std::int64_t order) {
  if (family == "clifford") return clifford_generators(n);
  if (family == "ordered") return ordered_gca_generators(n, order);
  throw Error(ErrorCode::InvalidInput, "family must be 'clifford' or 'ordered'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matrix representations of generalized Clifford algebras";

  static py::exception<Error> error(m, "GcakitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "skew_normal_form",
      [](const IntMatrix& t, std::int64_t nhat) {
        const TMatrix tm = validate_tmatrix(t, nhat);
        const auto f = skew_normal_form(tm);
        py::dict out;
        out["s"] = f.s;
        out["t_inv"] = f.t_inv;
        out["block_orders"] = f.block_orders();
        out["u"] = f.u;
        out["normal_form"] = f.normal_form();
        out["report"] = report_dict(verify_congruence(tm, f));
        return out;
      },
      py::arg("t"), py::arg("nhat"), "Skew-normal form T = U T' U^T (mod nhat) with a verification report.");

  m.def(
      "build_representation",
      [](const IntMatrix& t, std::int64_t nhat, std::optional<std::vector<std::int64_t>> orders) {
        const TMatrix tm = validate_tmatrix(t, nhat);
        const auto ord = orders.value_or(std::vector<std::int64_t>(static_cast<std::size_t>(tm.n()), nhat));
        return rep_dict(build_representation(GcaSpec(tm, ord)));
      },
      py::arg("t"), py::arg("nhat"), py::arg("orders") = py::none(),
      "Representation of e_j e_k = exp(2 pi i t_jk / nhat) e_k e_j, e_j^{N_j} = 1.");

  m.def("clifford_generators", [](int n) { return rep_dict(clifford_generators(n)); }, py::arg("n"));
  m.def(
      "ordered_generators", [](int n, std::int64_t order) { return rep_dict(ordered_gca_generators(n, order)); },
      py::arg("n"), py::arg("order"));

  m.def(
      "catalog",
      [](const std::string& name) {
        py::dict out;
        for (const auto& entry : catalog(name)) out[py::str(entry.name)] = entry.matrix.to_dense();
        return out;
      },
      py::arg("name"));
  m.def("catalog_names", &catalog_names);

  m.def(
      "projective_rep",
      [](const std::vector<std::int64_t>& orders, const std::vector<std::tuple<GroupElement, GroupElement, std::int64_t, std::int64_t>>& table) {
        std::map<std::pair<GroupElement, GroupElement>, Phase> entries;
        for (const auto& [g, h, num, den] : table) entries[{g, h}] = Phase(num, den);
        const auto rep = projective_rep(FactorSet(orders, entries));
        py::dict d;
        for (std::size_t g = 0; g < rep.group.size(); ++g) d[py::tuple(py::cast(rep.group.element(g)))] = rep.d[g].to_dense();
        py::dict out;
        out["dim"] = rep.gca.dim;
        out["d"] = d;
        out["report"] = report_dict(rep.report);
        return out;
      },
      py::arg("orders"), py::arg("table"),
      "Projective representation from factor-set entries (g, h, num, den); missing entries are 1.");

  m.def(
      "l_matrix",
      [](const std::vector<Complex>& lambda, const std::string& family, std::int64_t order) {
        const LSpec spec{lambda, family_rep(family, static_cast<int>(lambda.size()), order)};
        const auto check = nth_power_check(spec);
        py::dict out;
        out["matrix"] = l_matrix(spec);
        out["power_scalar"] = check.scalar;
        out["deviation"] = check.deviation;
        out["pass"] = check.pass;
        return out;
      },
      py::arg("lambda_"), py::arg("family") = "clifford", py::arg("order") = 2);

  m.def(
      "diagonalize_l",
      [](const std::vector<double>& lambda) {
        const std::vector<Complex> z(lambda.begin(), lambda.end());
        const auto d = diagonalize_l(LSpec{z, clifford_generators(static_cast<int>(lambda.size()))});
        py::dict out;
        out["u"] = d.u;
        out["eig"] = d.eig;
        out["lambda_norm"] = d.lambda_norm;
        out["fallback"] = d.fallback;
        out["axis"] = d.axis;
        out["report"] = report_dict(d.report);
        return out;
      },
      py::arg("lambda_"));

  m.def(
      "decompose",
      [](const DenseMatrix& mat) {
        const auto mu = schwinger_coeffs(mat);
        const auto dec = ramakrishnan_decomposition(mat);
        py::dict out;
        out["mu"] = mu.mu;
        out["c"] = dec.c;
        out["r"] = dec.r;
        out["reconstruction_error"] = mu.reconstruction_error;
        out["report"] = report_dict(dec.report);
        return out;
      },
      py::arg("m"), "mu (A^k B^l basis), C (B^k A^l basis) and the cyclic-diagonal matrix R.");

  m.def(
      "wigner_forward",
      [](const RealMatrix& w) {
        if (w.rows() != w.cols() || w.rows() % 2 == 0) {
          throw Error(ErrorCode::DimensionMismatch, "Wigner table must be square of odd size");
        }
        return wigner_forward(WignerTable{w.rows() / 2, w});
      },
      py::arg("w"), "Hermitian matrix of a real (2nu+1)x(2nu+1) table; row r holds k = r - nu.");
  m.def(
      "wigner_inverse", [](const DenseMatrix& h) { return wigner_inverse(h).table.w; }, py::arg("h"));

  m.def(
      "canonical",
      [](std::int64_t k, std::int64_t l, std::int64_t mm, std::int64_t n, std::int64_t order) {
        const CanonicalParams p(k, l, mm, n, order);
        const auto pair = canonical_pair(p);
        py::dict out;
        out["a"] = pair.a.to_dense();
        out["b"] = pair.b.to_dense();
        VerificationReport report = pair.report;
        try {
          const auto s = canonical_intertwiner(p);
          report.append(s.report);
          out["s"] = s.s;
          out["zeta_a"] = s.zeta_a;
          out["zeta_b"] = s.zeta_b;
          out["supported"] = true;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::UnsupportedTransform) throw;
          report.add("intertwiner", false, e.what());
          out["s"] = py::none();
          out["supported"] = false;
        }
        out["report"] = report_dict(report);
        return out;
      },
      py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n"), py::arg("order"));

  m.def(
      "magnetic",
      [](std::pair<std::int64_t, std::int64_t> f12, std::pair<std::int64_t, std::int64_t> f13,
         std::pair<std::int64_t, std::int64_t> f23) {
        const MagneticLattice lat({f12.first, f12.second}, {f13.first, f13.second}, {f23.first, f23.second});
        return rep_dict(magnetic_translation_rep(lat));
      },
      py::arg("f12"), py::arg("f13"), py::arg("f23"), "Magnetic translations for fluxes given as (p, q).");
  m.def(
      "bloch_phase",
      [](std::int64_t n1, std::int64_t n2, std::int64_t n3, std::pair<std::int64_t, std::int64_t> f12,
         std::pair<std::int64_t, std::int64_t> f13, std::pair<std::int64_t, std::int64_t> f23) {
        const MagneticLattice lat({f12.first, f12.second}, {f13.first, f13.second}, {f23.first, f23.second});
        return phase_tuple(bloch_phase(n1, n2, n3, lat));
      },
      py::arg("n1"), py::arg("n2"), py::arg("n3"), py::arg("f12"), py::arg("f13"), py::arg("f23"),
      "exp(i phi) as (num, den) meaning exp(2 pi i num / den).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
