#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fdwback/problem_io.hpp"
#include "fdwback/psi.hpp"
#include "fdwback/solver.hpp"
#include "fdwback/special.hpp"

namespace {

using fdw::ordered_json;

// Fully specified uniform doubles in [-1, 1); the stdlib distributions are
// implementation-defined, which would break byte-identical reproducibility.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {
    return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
  }
};

void emit(const std::string& command, const ordered_json& j) {
  std::string text = fdw::dump_json(j, 2);
  ordered_json reparsed = ordered_json::parse(text);
  fdw::validate_output(command, reparsed);
  std::cout << text << "\n";
}

fdw::Spectrum spectrum_from_flags(const std::string& problem_path, std::size_t modes,
                                  double length) {
  if (!problem_path.empty()) return fdw::load_problem(problem_path).spectrum;
  if (modes == 0) throw std::invalid_argument("need --problem or --modes/--length");
  return fdw::dirichlet_laplacian_1d(length, modes);
}

int run(int argc, char** argv) {
  CLI::App app{"Backward-in-time solver toolkit for the fractional diffusion-wave equation"};
  app.require_subcommand(1);

  // ---- ml ----
  double ml_alpha = 1.5, ml_beta = 1.0, ml_eta = 0.0;
  std::size_t ml_terms = 0;
  bool ml_json = false;
  auto* c_ml = app.add_subcommand("ml", "Evaluate E_{alpha,beta}(-eta)");
  c_ml->add_option("--alpha", ml_alpha, "order in (1,2]")->required();
  c_ml->add_option("--beta", ml_beta, "second parameter > 0")->required();
  c_ml->add_option("--eta", ml_eta, "argument is -eta, eta >= 0")->required();
  c_ml->add_option("--asymptotic-terms", ml_terms,
                   "force the truncated asymptotic expansion with this many terms");
  c_ml->add_flag("--json", ml_json, "structured output");

  // ---- psi-zeros ----
  double pz_alpha = 1.5, pz_tol = 1e-12;
  std::size_t pz_grid = 4096;
  double pz_theta = 0.0;
  std::optional<double> pz_ceiling;
  int pz_threads = 1;
  bool pz_csv = false, pz_json = false;
  auto* c_pz = app.add_subcommand("psi-zeros", "All positive zeros of psi with certified brackets");
  c_pz->add_option("--alpha", pz_alpha)->required();
  c_pz->add_option("--grid-points", pz_grid, "linear scan points (default 4096)");
  c_pz->add_option("--bracket-tol", pz_tol, "relative bracket width (default 1e-12)");
  c_pz->add_option("--ceiling", pz_ceiling, "override the Lemma-2 search ceiling");
  c_pz->add_option("--theta", pz_theta, "contour angle for the ceiling");
  c_pz->add_option("--threads", pz_threads, "parallel grid evaluation (same output)");
  c_pz->add_flag("--csv", pz_csv, "CSV: index,eta,lo,hi,residual");
  c_pz->add_flag("--json", pz_json, "JSON output (default)");

  // ---- psi-table ----
  double pt_alpha = 1.5, pt_eta_max = 50.0;
  std::size_t pt_points = 512;
  auto* c_pt = app.add_subcommand("psi-table", "CSV table of (eta, psi(eta)) for plotting");
  c_pt->add_option("--alpha", pt_alpha)->required();
  c_pt->add_option("--eta-max", pt_eta_max)->required();
  c_pt->add_option("--points", pt_points)->required();

  // ---- bound ----
  double bd_alpha = 1.5, bd_theta = 0.0;
  bool bd_json = false;
  auto* c_bd = app.add_subcommand("bound", "Lemma-2 constants and the eta upper bound");
  c_bd->add_option("--alpha", bd_alpha)->required();
  c_bd->add_option("--theta", bd_theta, "contour angle in (pi*alpha/2, pi); default midpoint");
  c_bd->add_flag("--json", bd_json);

  // ---- lambda-set ----
  double ls_alpha = 1.5, ls_tmax = 0.0, ls_length = 3.14159265358979323846;
  std::size_t ls_modes = 0;
  std::string ls_problem;
  auto* c_ls = app.add_subcommand("lambda-set", "Exceptional final times up to --t-max");
  c_ls->add_option("--alpha", ls_alpha)->required();
  c_ls->add_option("--t-max", ls_tmax)->required();
  c_ls->add_option("--problem", ls_problem, "ProblemSpec JSON supplying the spectrum");
  c_ls->add_option("--modes", ls_modes, "built-in Laplacian mode count");
  c_ls->add_option("--length", ls_length, "built-in Laplacian interval length");

  // ---- forward / backward / roundtrip ----
  std::string fw_problem, fw_csv_field;
  double fw_t = -1.0;
  std::size_t fw_grid = 0;
  int fw_threads = 1;
  auto* c_fw = app.add_subcommand("forward", "Evolve (a,b) to time t");
  c_fw->add_option("--problem", fw_problem)->required();
  c_fw->add_option("--t", fw_t, "evolution time (default: the problem's T)");
  c_fw->add_option("--csv", fw_csv_field, "emit a grid profile CSV of 'u' or 'du'");
  c_fw->add_option("--grid", fw_grid, "profile grid size (default 8x modes)");
  c_fw->add_option("--threads", fw_threads);

  std::string bw_problem, bw_csv_field;
  bool bw_force = false;
  std::size_t bw_grid = 0;
  int bw_threads = 1;
  auto* c_bw = app.add_subcommand("backward", "Reconstruct (a,b) from final data (p,q)");
  c_bw->add_option("--problem", bw_problem)->required();
  c_bw->add_flag("--force", bw_force, "pass ill-posed modes through as zeros");
  c_bw->add_option("--csv", bw_csv_field, "emit a grid profile CSV of 'a' or 'b'");
  c_bw->add_option("--grid", bw_grid, "profile grid size (default 8x modes)");
  c_bw->add_option("--threads", bw_threads);

  std::string rt_problem;
  std::uint64_t rt_seed = 1;
  int rt_threads = 1;
  auto* c_rt = app.add_subcommand("roundtrip", "Random data forward+backward consistency demo");
  c_rt->add_option("--problem", rt_problem)->required();
  c_rt->add_option("--seed", rt_seed, "seed for the random coefficients");
  c_rt->add_option("--threads", rt_threads);

  // ---- nullmode ----
  double nm_alpha = 1.5, nm_mu = 1.0, nm_T = 0.0;
  std::size_t nm_zero_index = 1;
  auto* c_nm = app.add_subcommand("nullmode", "Non-uniqueness witness at an exceptional T");
  c_nm->add_option("--alpha", nm_alpha)->required();
  c_nm->add_option("--mu", nm_mu, "eigenvalue carrying the null mode")->required();
  c_nm->add_option("--zero-index", nm_zero_index, "which psi zero builds T (1-based)");
  c_nm->add_option("--T", nm_T, "explicit exceptional time (overrides --zero-index)");

  // ---- ode ----
  double od_alpha = 1.5, od_lambda = 1.0, od_a = 0.0, od_b = 0.0, od_t = 1.0;
  double od_floor = 1e-8;
  std::string od_direction = "backward";
  auto* c_od = app.add_subcommand("ode", "Scalar fractional ODE d_t^alpha v = -lambda v");
  c_od->add_option("--alpha", od_alpha)->required();
  c_od->add_option("--lambda", od_lambda)->required();
  c_od->add_option("--direction", od_direction)->check(CLI::IsMember({"forward", "backward"}));
  c_od->add_option("--a", od_a, "initial value (forward) or final value aT (backward)");
  c_od->add_option("--b", od_b, "initial derivative (forward) or final bT (backward)");
  c_od->add_option("--t", od_t, "evolution time (forward) or final time T (backward)");
  c_od->add_option("--psi-floor", od_floor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n\n" << app.help();
    return 64;
  }

  if (c_ml->parsed()) {
    fdw::MlQuery q{ml_alpha, ml_beta, ml_eta};
    fdw::MlValue v;
    if (ml_terms > 0) {
      v = fdw::ml_asymptotic(q, ml_terms);
      std::size_t opt = fdw::ml_asymptotic_optimal_terms(q);
      if (ml_terms > opt)
        std::cerr << "warning: " << ml_terms << " terms exceed the optimal truncation index "
                  << opt << "; the expansion diverges from here\n";
    } else {
      v = fdw::ml(q);
    }
    if (ml_json) {
      ordered_json j;
      j["alpha"] = q.alpha;
      j["beta"] = q.beta;
      j["eta"] = q.eta;
      j["value"] = v.value;
      j["abs_error_estimate"] = v.abs_error_estimate;
      j["regime"] = fdw::to_string(v.regime);
      emit("ml", j);
    } else {
      std::cout << fdw::format_double(v.value) << "\n";
    }
    return 0;
  }

  if (c_pz->parsed()) {
    fdw::FindZerosOptions opts;
    opts.grid_points = pz_grid;
    opts.bracket_tol = pz_tol;
    opts.ceiling_override = pz_ceiling;
    opts.contour.theta = pz_theta;
    opts.threads = pz_threads;
    fdw::ZeroSet z = fdw::find_zeros(pz_alpha, opts);
    for (const auto& note : z.notes) std::cerr << "warning: " << note << "\n";
    if (pz_csv) {
      std::cout << "index,eta,lo,hi,residual\n";
      for (std::size_t i = 0; i < z.zeros.size(); ++i) {
        const auto& zb = z.zeros[i];
        std::cout << (i + 1) << "," << fdw::format_double(zb.eta) << ","
                  << fdw::format_double(zb.lo) << "," << fdw::format_double(zb.hi) << ","
                  << fdw::format_double(zb.residual) << "\n";
      }
    } else {
      emit("psi-zeros", fdw::zeroset_to_json(z));
    }
    return 0;
  }

  if (c_pt->parsed()) {
    std::cout << "eta,psi\n";
    for (std::size_t i = 0; i <= pt_points; ++i) {
      double eta = pt_eta_max * static_cast<double>(i) / static_cast<double>(pt_points);
      std::cout << fdw::format_double(eta) << "," << fdw::format_double(fdw::psi(pt_alpha, eta))
                << "\n";
    }
    return 0;
  }

  if (c_bd->parsed()) {
    fdw::ContourConfig cfg;
    cfg.theta = bd_theta;
    fdw::BoundReport rep = fdw::bound_report(bd_alpha, cfg);
    ordered_json j;
    j["alpha"] = bd_alpha;
    j["theta"] = rep.theta_used;
    j["kappa1"] = rep.kappa1;
    j["kappa2"] = rep.kappa2;
    j["kappa3"] = rep.kappa3;
    j["nu1"] = rep.nu1;
    j["nu2"] = rep.nu2;
    j["nu3"] = rep.nu3;
    j["eta_bound"] = rep.eta_bound;
    j["safe_time_threshold_mu1"] = std::pow(rep.eta_bound, 1.0 / bd_alpha);
    emit("bound", j);
    return 0;
  }

  if (c_ls->parsed()) {
    fdw::Spectrum s = spectrum_from_flags(ls_problem, ls_modes, ls_length);
    fdw::ZeroSet z = fdw::find_zeros(ls_alpha);
    fdw::Lambda lam = fdw::exceptional_set(s, z, ls_alpha, ls_tmax);
    ordered_json j = fdw::lambda_to_json(lam);
    j["alpha"] = ls_alpha;
    j["t_max"] = ls_tmax;
    emit("lambda-set", j);
    return 0;
  }

  if (c_fw->parsed()) {
    fdw::ProblemSpec p = fdw::load_problem(fw_problem);
    if (!p.has_data) throw std::invalid_argument("forward: problem file lacks a/b data");
    double t = fw_t >= 0.0 ? fw_t : p.T;
    fdw::EvolvedState ev = fdw::forward(p.spectrum, p.a, p.b, p.alpha, t, fw_threads);
    if (!fw_csv_field.empty()) {
      if (p.spectrum.kind != fdw::SpectrumKind::dirichlet_laplacian_1d)
        throw std::invalid_argument("forward --csv: profiles need the built-in spectrum");
      std::size_t grid = fw_grid ? fw_grid : 8 * p.spectrum.mode_count();
      const fdw::SpectralCoeffs& c = fw_csv_field == "du" ? ev.du : ev.u;
      fdw::write_grid_csv(std::cout, fdw::evaluate(c, p.spectrum, grid));
    } else {
      ordered_json j;
      j["alpha"] = p.alpha;
      j["t"] = t;
      j["u"] = fdw::coeffs_to_json(ev.u);
      j["du"] = fdw::coeffs_to_json(ev.du);
      emit("forward", j);
    }
    return 0;
  }

  if (c_bw->parsed()) {
    fdw::ProblemSpec p = fdw::load_problem(bw_problem);
    if (!p.has_data)
      throw std::invalid_argument("backward: problem file lacks final data in a/b");
    fdw::BackwardOptions opts;
    opts.psi_floor = p.psi_floor;
    opts.force = bw_force;
    opts.threads = bw_threads;
    fdw::BackwardResult r = fdw::backward(p.spectrum, p.a, p.b, p.alpha, p.T, opts);
    if (!bw_csv_field.empty()) {
      if (p.spectrum.kind != fdw::SpectrumKind::dirichlet_laplacian_1d)
        throw std::invalid_argument("backward --csv: profiles need the built-in spectrum");
      std::size_t grid = bw_grid ? bw_grid : 8 * p.spectrum.mode_count();
      const fdw::SpectralCoeffs& c = bw_csv_field == "b" ? r.b : r.a;
      fdw::write_grid_csv(std::cout, fdw::evaluate(c, p.spectrum, grid));
    } else {
      ordered_json j;
      j["alpha"] = p.alpha;
      j["T"] = p.T;
      j["a"] = fdw::coeffs_to_json(r.a);
      j["b"] = fdw::coeffs_to_json(r.b);
      j["forced_modes"] = r.forced_modes;
      j["diagnostics"] = fdw::diagnostics_to_json(r.diag);
      emit("backward", j);
    }
    return 0;
  }

  if (c_rt->parsed()) {
    fdw::ProblemSpec p = fdw::load_problem(rt_problem);
    SplitMix64 rng(rt_seed);
    fdw::SpectralCoeffs a = fdw::SpectralCoeffs::zeros_like(p.spectrum);
    fdw::SpectralCoeffs b = fdw::SpectralCoeffs::zeros_like(p.spectrum);
    for (auto& m : a.modes)
      for (double& v : m) v = rng.uniform();
    for (auto& m : b.modes)
      for (double& v : m) v = rng.uniform();
    fdw::EvolvedState ev = fdw::forward(p.spectrum, a, b, p.alpha, p.T, rt_threads);
    fdw::BackwardOptions opts;
    opts.psi_floor = p.psi_floor;
    opts.threads = rt_threads;
    fdw::BackwardResult r = fdw::backward(p.spectrum, ev.u, ev.du, p.alpha, p.T, opts);
    double num = 0.0, den = 0.0;
    auto accum = [&](const fdw::SpectralCoeffs& x, const fdw::SpectralCoeffs& y) {
      for (std::size_t n = 0; n < x.modes.size(); ++n)
        for (std::size_t jj = 0; jj < x.modes[n].size(); ++jj) {
          double d = x.modes[n][jj] - y.modes[n][jj];
          num += d * d;
          den += x.modes[n][jj] * x.modes[n][jj];
        }
    };
    accum(a, r.a);
    accum(b, r.b);
    ordered_json j;
    j["alpha"] = p.alpha;
    j["T"] = p.T;
    j["seed"] = rt_seed;
    j["u"] = fdw::coeffs_to_json(ev.u);
    j["du"] = fdw::coeffs_to_json(ev.du);
    j["recovered_a"] = fdw::coeffs_to_json(r.a);
    j["recovered_b"] = fdw::coeffs_to_json(r.b);
    j["relative_roundtrip_error"] = den > 0 ? std::sqrt(num / den) : 0.0;
    j["diagnostics"] = fdw::diagnostics_to_json(r.diag);
    emit("roundtrip", j);
    return 0;
  }

  if (c_nm->parsed()) {
    double T = nm_T;
    double eta_used = 0.0;
    if (T <= 0.0) {
      fdw::ZeroSet z = fdw::find_zeros(nm_alpha);
      if (nm_zero_index < 1 || nm_zero_index > z.zeros.size())
        throw std::invalid_argument("nullmode: zero-index out of range (found " +
                                    std::to_string(z.zeros.size()) + " zeros)");
      eta_used = z.zeros[nm_zero_index - 1].eta;
      T = std::pow(eta_used / nm_mu, 1.0 / nm_alpha);
    } else {
      eta_used = nm_mu * std::pow(T, nm_alpha);
    }
    fdw::NullModeDatum d = fdw::null_mode(nm_alpha, nm_mu, T);
    fdw::OdeState img = fdw::ode_forward(nm_mu, d.a0, d.b0, nm_alpha, T);
    ordered_json j;
    j["alpha"] = nm_alpha;
    j["mu"] = nm_mu;
    j["T"] = T;
    j["eta"] = eta_used;
    j["a0"] = d.a0;
    j["b0"] = d.b0;
    j["psi_at_eta"] = fdw::psi(nm_alpha, eta_used);
    j["forward_u_at_T"] = img.v;
    j["forward_du_at_T"] = img.dv;
    emit("nullmode", j);
    return 0;
  }

  if (c_od->parsed()) {
    ordered_json j;
    j["alpha"] = od_alpha;
    j["lambda"] = od_lambda;
    j["direction"] = od_direction;
    if (od_direction == "forward") {
      fdw::OdeState st = fdw::ode_forward(od_lambda, od_a, od_b, od_alpha, od_t);
      j["t"] = od_t;
      j["v"] = st.v;
      j["dv"] = st.dv;
    } else {
      fdw::OdeBackwardResult r = fdw::ode_backward(od_lambda, od_a, od_b, od_alpha, od_t, od_floor);
      j["T"] = od_t;
      j["a"] = r.a;
      j["b"] = r.b;
      j["diagnostics"] = fdw::diagnostics_to_json(r.diag);
    }
    emit("ode", j);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fdw::ill_posed_error& e) {
    ordered_json j;
    j["error"] = "ill_posed";
    j["message"] = e.what();
    j["modes"] = e.modes();
    j["min_abs_psi"] = e.min_abs_psi();
    j["psi_floor"] = e.floor();
    std::cout << fdw::dump_json(j, 2) << "\n";
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
