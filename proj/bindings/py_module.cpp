#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdwback/problem_io.hpp"
#include "fdwback/psi.hpp"
#include "fdwback/solver.hpp"
#include "fdwback/special.hpp"

namespace py = pybind11;

namespace {

fdw::SpectralCoeffs coeffs_from_list(const std::vector<double>& flat, const fdw::Spectrum& s) {
  return fdw::unflatten(flat, s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Backward problem for the time-fractional diffusion-wave equation (1 < alpha < 2)";

  py::register_exception<fdw::pole_error>(m, "PoleError", PyExc_ValueError);
  py::register_exception<fdw::accuracy_error>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<fdw::convergence_error>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<fdw::bracket_error>(m, "BracketError", PyExc_ArithmeticError);
  py::register_exception<fdw::degenerate_mode_error>(m, "DegenerateModeError",
                                                     PyExc_ArithmeticError);
  py::register_exception<fdw::ill_posed_error>(m, "IllPosedError", PyExc_RuntimeError);

  m.def("gamma", &fdw::gamma_fn, py::arg("x"), "Real Gamma function");

  py::class_<fdw::MlValue>(m, "MlValue")
      .def_readonly("value", &fdw::MlValue::value)
      .def_readonly("abs_error_estimate", &fdw::MlValue::abs_error_estimate)
      .def_property_readonly("regime",
                             [](const fdw::MlValue& v) { return fdw::to_string(v.regime); })
      .def("__repr__", [](const fdw::MlValue& v) {
        return "MlValue(value=" + fdw::format_double(v.value) +
               ", regime=" + fdw::to_string(v.regime) + ")";
      });

  m.def(
      "ml",
      [](double alpha, double beta, double eta) { return fdw::ml({alpha, beta, eta}); },
      py::arg("alpha"), py::arg("beta"), py::arg("eta"),
      "E_{alpha,beta}(-eta) with automatic regime selection");
  m.def(
      "ml_asymptotic",
      [](double alpha, double beta, double eta, std::size_t terms) {
        return fdw::ml_asymptotic({alpha, beta, eta}, terms);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("eta"), py::arg("terms"));

  m.def("psi", &fdw::psi, py::arg("alpha"), py::arg("eta"));
  m.def("psi_leading_constant", &fdw::psi_leading_constant, py::arg("alpha"));

  py::class_<fdw::ZeroBracket>(m, "ZeroBracket")
      .def_readonly("eta", &fdw::ZeroBracket::eta)
      .def_readonly("lo", &fdw::ZeroBracket::lo)
      .def_readonly("hi", &fdw::ZeroBracket::hi)
      .def_readonly("residual", &fdw::ZeroBracket::residual);
  py::class_<fdw::ZeroSet>(m, "ZeroSet")
      .def_readonly("alpha", &fdw::ZeroSet::alpha)
      .def_readonly("zeros", &fdw::ZeroSet::zeros)
      .def_readonly("search_ceiling", &fdw::ZeroSet::search_ceiling)
      .def_readonly("notes", &fdw::ZeroSet::notes)
      .def("__len__", [](const fdw::ZeroSet& z) { return z.zeros.size(); });

  m.def(
      "find_zeros",
      [](double alpha, std::size_t grid_points, double bracket_tol,
         std::optional<double> ceiling, int threads) {
        fdw::FindZerosOptions opts;
        opts.grid_points = grid_points;
        opts.bracket_tol = bracket_tol;
        opts.ceiling_override = ceiling;
        opts.threads = threads;
        return fdw::find_zeros(alpha, opts);
      },
      py::arg("alpha"), py::arg("grid_points") = 4096, py::arg("bracket_tol") = 1e-12,
      py::arg("ceiling") = std::nullopt, py::arg("threads") = 1);

  m.def("kappa_constants", &fdw::kappa_constants, py::arg("alpha"));
  m.def(
      "nu_integrals",
      [](double alpha, double theta, int panels) {
        fdw::ContourConfig cfg;
        cfg.theta = theta;
        cfg.panels = panels;
        fdw::NuValues nu = fdw::nu_integrals(alpha, cfg);
        return py::make_tuple(nu.nu1, nu.nu2, nu.nu3);
      },
      py::arg("alpha"), py::arg("theta") = 0.0, py::arg("panels") = 64);
  m.def(
      "eta_upper_bound",
      [](double alpha, double theta) {
        fdw::ContourConfig cfg;
        cfg.theta = theta;
        return fdw::eta_upper_bound(alpha, cfg);
      },
      py::arg("alpha"), py::arg("theta") = 0.0);
  m.def(
      "safe_time_threshold",
      [](double alpha, double mu_min, double theta) {
        fdw::ContourConfig cfg;
        cfg.theta = theta;
        return fdw::safe_time_threshold(alpha, mu_min, cfg);
      },
      py::arg("alpha"), py::arg("mu_min"), py::arg("theta") = 0.0);

  py::class_<fdw::Spectrum>(m, "Spectrum")
      .def_property_readonly("eigenvalues",
                             [](const fdw::Spectrum& s) { return s.eigenvalues; })
      .def_property_readonly("multiplicities",
                             [](const fdw::Spectrum& s) { return s.multiplicities; })
      .def("mode_count", &fdw::Spectrum::mode_count)
      .def("coeff_count", &fdw::Spectrum::coeff_count);
  m.def("dirichlet_laplacian_1d", &fdw::dirichlet_laplacian_1d, py::arg("length"),
        py::arg("n_modes"));
  m.def("user_spectrum", &fdw::user_spectrum, py::arg("eigenvalues"), py::arg("multiplicities"));

  m.def("norm_l2", [](const std::vector<double>& flat, const fdw::Spectrum& s) {
    return fdw::norm_l2(coeffs_from_list(flat, s));
  });
  m.def("norm_h2", [](const std::vector<double>& flat, const fdw::Spectrum& s) {
    return fdw::norm_h2(coeffs_from_list(flat, s), s);
  });

  py::class_<fdw::ModeMatrix>(m, "ModeMatrix")
      .def_readonly("e1", &fdw::ModeMatrix::e1)
      .def_readonly("e2", &fdw::ModeMatrix::e2)
      .def_readonly("ea", &fdw::ModeMatrix::ea)
      .def_readonly("mu", &fdw::ModeMatrix::mu)
      .def_readonly("T", &fdw::ModeMatrix::T)
      .def_readonly("alpha", &fdw::ModeMatrix::alpha)
      .def_readonly("det", &fdw::ModeMatrix::det);
  m.def("mode_matrix", &fdw::mode_matrix, py::arg("alpha"), py::arg("mu"), py::arg("T"));

  py::class_<fdw::BackwardDiagnostics>(m, "BackwardDiagnostics")
      .def_readonly("min_abs_psi", &fdw::BackwardDiagnostics::min_abs_psi)
      .def_readonly("argmin_mode", &fdw::BackwardDiagnostics::argmin_mode)
      .def_readonly("nearest_exceptional_T", &fdw::BackwardDiagnostics::nearest_exceptional_T)
      .def_readonly("condition_estimate", &fdw::BackwardDiagnostics::condition_estimate);

  m.def(
      "forward",
      [](const fdw::Spectrum& s, const std::vector<double>& a, const std::vector<double>& b,
         double alpha, double t, int threads) {
        fdw::EvolvedState ev =
            fdw::forward(s, coeffs_from_list(a, s), coeffs_from_list(b, s), alpha, t, threads);
        return py::make_tuple(fdw::flatten(ev.u), fdw::flatten(ev.du));
      },
      py::arg("spectrum"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("t"),
      py::arg("threads") = 1);

  m.def(
      "backward",
      [](const fdw::Spectrum& s, const std::vector<double>& p, const std::vector<double>& q,
         double alpha, double T, double psi_floor, bool force, int threads) {
        fdw::BackwardOptions opts;
        opts.psi_floor = psi_floor;
        opts.force = force;
        opts.threads = threads;
        fdw::BackwardResult r =
            fdw::backward(s, coeffs_from_list(p, s), coeffs_from_list(q, s), alpha, T, opts);
        return py::make_tuple(fdw::flatten(r.a), fdw::flatten(r.b), r.diag);
      },
      py::arg("spectrum"), py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("T"),
      py::arg("psi_floor") = 1e-8, py::arg("force") = false, py::arg("threads") = 1);

  m.def(
      "exceptional_set",
      [](const fdw::Spectrum& s, const fdw::ZeroSet& z, double alpha, double t_max) {
        fdw::Lambda lam = fdw::exceptional_set(s, z, alpha, t_max);
        py::list out;
        for (const auto& e : lam.entries)
          out.append(py::make_tuple(e.T, e.mode_index, e.zero_index));
        return out;
      },
      py::arg("spectrum"), py::arg("zeros"), py::arg("alpha"), py::arg("t_max"));

  m.def(
      "null_mode",
      [](double alpha, double mu, double T) {
        fdw::NullModeDatum d = fdw::null_mode(alpha, mu, T);
        return py::make_tuple(d.a0, d.b0);
      },
      py::arg("alpha"), py::arg("mu"), py::arg("T"));

  m.def(
      "ode_forward",
      [](double lam, double a, double b, double alpha, double t) {
        fdw::OdeState st = fdw::ode_forward(lam, a, b, alpha, t);
        return py::make_tuple(st.v, st.dv);
      },
      py::arg("lam"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("t"));
  m.def(
      "ode_backward",
      [](double lam, double aT, double bT, double alpha, double T, double psi_floor) {
        fdw::OdeBackwardResult r = fdw::ode_backward(lam, aT, bT, alpha, T, psi_floor);
        return py::make_tuple(r.a, r.b, r.diag);
      },
      py::arg("lam"), py::arg("aT"), py::arg("bT"), py::arg("alpha"), py::arg("T"),
      py::arg("psi_floor") = 1e-8);
}
