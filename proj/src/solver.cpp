#include "fdwback/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "fdwback/special.hpp"
#include "parallel.hpp"

namespace fdw {

namespace {

void validate_solver_alpha(double alpha) {
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::invalid_argument("solver: alpha must lie in the open interval (1, 2)");
}

const ZeroSet& cached_zeros(double alpha) {
  static std::mutex mu;
  static std::map<double, ZeroSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alpha);
  if (it == cache.end()) it = cache.emplace(alpha, find_zeros(alpha)).first;
  return it->second;
}

double nearest_exceptional(const Spectrum& s, const ZeroSet& z, double alpha, double T) {
  double best = 0.0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (double mu : s.eigenvalues) {
    for (const auto& zero : z.zeros) {
      double t_exc = std::pow(zero.eta / mu, 1.0 / alpha);
      double d = std::abs(t_exc - T);
      if (d < best_dist) {
        best_dist = d;
        best = t_exc;
      }
    }
  }
  return best;
}

}  // namespace

ModeMatrix mode_matrix(double alpha, double mu, double T) {
  validate_solver_alpha(alpha);
  if (!(mu > 0.0)) throw std::invalid_argument("mode_matrix: mu must be > 0");
  if (!(T > 0.0)) throw std::invalid_argument("mode_matrix: T must be > 0");
  double eta = mu * std::pow(T, alpha);
  MlTriple t = ml_triple(alpha, eta);
  ModeMatrix m;
  m.e1 = t.e1.value;
  m.e2 = t.e2.value;
  m.ea = t.ea.value;
  m.mu = mu;
  m.T = T;
  m.alpha = alpha;
  m.det = m.e1 * m.e1 + eta * m.e2 * m.ea;
  return m;
}

EvolvedState forward(const Spectrum& s, const SpectralCoeffs& a, const SpectralCoeffs& b,
                     double alpha, double t, int threads) {
  validate_solver_alpha(alpha);
  s.validate();
  if (!a.shape_matches(s) || !b.shape_matches(s))
    throw std::invalid_argument("forward: coefficient shape mismatch");
  if (!(t >= 0.0)) throw std::invalid_argument("forward: t must be >= 0");
  EvolvedState out{a, b};
  if (t == 0.0) return out;  // E-values at 0 are 1 and t^{alpha-1} vanishes
  const double t_pow = std::pow(t, alpha);
  const double t_pow1 = std::pow(t, alpha - 1.0);
  detail::parallel_for(s.mode_count(), threads, [&](std::size_t n) {
    double mu = s.eigenvalues[n];
    MlTriple ml3 = ml_triple(alpha, mu * t_pow);
    for (std::size_t j = 0; j < a.modes[n].size(); ++j) {
      double an = a.modes[n][j], bn = b.modes[n][j];
      out.u.modes[n][j] = an * ml3.e1.value + bn * t * ml3.e2.value;
      out.du.modes[n][j] = -mu * t_pow1 * an * ml3.ea.value + bn * ml3.e1.value;
    }
  });
  return out;
}

BackwardResult backward(const Spectrum& s, const SpectralCoeffs& p, const SpectralCoeffs& q,
                        double alpha, double T, const BackwardOptions& opts) {
  validate_solver_alpha(alpha);
  s.validate();
  if (!p.shape_matches(s) || !q.shape_matches(s))
    throw std::invalid_argument("backward: coefficient shape mismatch");
  if (!(T > 0.0)) throw std::invalid_argument("backward: T must be > 0");
  if (!(opts.psi_floor > 0.0)) throw std::invalid_argument("backward: psi_floor must be > 0");

  const std::size_t n_modes = s.mode_count();
  const double t_pow = std::pow(T, alpha);
  const double t_pow1 = std::pow(T, alpha - 1.0);

  std::vector<MlTriple> ml3(n_modes);
  std::vector<double> det(n_modes);
  std::vector<double> det_scale(n_modes);
  detail::parallel_for(n_modes, opts.threads, [&](std::size_t n) {
    double eta = s.eigenvalues[n] * t_pow;
    ml3[n] = ml_triple(alpha, eta);
    double sq = ml3[n].e1.value * ml3[n].e1.value;
    double cross = eta * ml3[n].e2.value * ml3[n].ea.value;
    det[n] = sq + cross;
    // psi decays like eta^-2 everywhere, so an absolute floor would refuse
    // every large T; the dividing hazard is cancellation between the two
    // summands, measured against their combined magnitude
    det_scale[n] = sq + std::abs(cross);
  });

  BackwardResult out;
  out.a = SpectralCoeffs::zeros_like(s);
  out.b = SpectralCoeffs::zeros_like(s);

  std::vector<std::size_t> offending;
  double min_abs = std::numeric_limits<double>::infinity();
  std::size_t argmin = 0;
  for (std::size_t n = 0; n < n_modes; ++n) {
    double ad = std::abs(det[n]);
    if (ad < min_abs) {
      min_abs = ad;
      argmin = n;
    }
    if (ad < opts.psi_floor * det_scale[n]) offending.push_back(n + 1);
  }
  if (!offending.empty() && !opts.force) {
    std::ostringstream os;
    os << "backward: ill-posed at T = " << T << "; |psi(mu_n T^alpha)| < " << opts.psi_floor
       << " of the determinant scale for mode(s)";
    for (std::size_t n : offending) os << " " << n;
    throw ill_posed_error(os.str(), offending, min_abs, opts.psi_floor);
  }

  detail::parallel_for(n_modes, opts.threads, [&](std::size_t n) {
    double ad = std::abs(det[n]);
    if (ad < opts.psi_floor * det_scale[n]) return;  // forced pass-through as zeros
    double mu = s.eigenvalues[n];
    const auto& m = ml3[n];
    for (std::size_t j = 0; j < p.modes[n].size(); ++j) {
      double pn = p.modes[n][j], qn = q.modes[n][j];
      out.a.modes[n][j] = (pn * m.e1.value - qn * T * m.e2.value) / det[n];
      out.b.modes[n][j] = (pn * mu * t_pow1 * m.ea.value + qn * m.e1.value) / det[n];
    }
  });

  out.forced_modes = offending;
  out.diag.min_abs_psi = min_abs;
  out.diag.argmin_mode = argmin + 1;
  const ZeroSet& zeros = opts.zeros ? *opts.zeros : cached_zeros(alpha);
  out.diag.nearest_exceptional_T = nearest_exceptional(s, zeros, alpha, T);
  double num = norm_l2(out.a) + norm_l2(out.b);
  double den = norm_h2(p, s) + norm_h2(q, s);
  if (num > 0.0 && den > 0.0) {
    double r = num / den;
    out.diag.condition_estimate = std::max(r, 1.0 / r);
  } else {
    out.diag.condition_estimate = 1.0;
  }
  return out;
}

Lambda exceptional_set(const Spectrum& s, const ZeroSet& z, double alpha, double T_max) {
  validate_solver_alpha(alpha);
  s.validate();
  if (!(T_max > 0.0)) throw std::invalid_argument("exceptional_set: T_max must be > 0");
  Lambda out;
  for (std::size_t n = 0; n < s.mode_count(); ++n) {
    for (std::size_t k = 0; k < z.zeros.size(); ++k) {
      double T = std::pow(z.zeros[k].eta / s.eigenvalues[n], 1.0 / alpha);
      if (T <= T_max) out.entries.push_back({T, n + 1, k + 1});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const LambdaEntry& a, const LambdaEntry& b) {
    if (a.T != b.T) return a.T < b.T;
    if (a.mode_index != b.mode_index) return a.mode_index < b.mode_index;
    return a.zero_index < b.zero_index;
  });
  return out;
}

NullModeDatum null_mode(double alpha, double mu_n0, double T) {
  validate_solver_alpha(alpha);
  if (!(mu_n0 > 0.0)) throw std::invalid_argument("null_mode: mu must be > 0");
  if (!(T > 0.0)) throw std::invalid_argument("null_mode: T must be > 0");
  double eta = mu_n0 * std::pow(T, alpha);
  MlTriple t = ml_triple(alpha, eta);
  double det = t.e1.value * t.e1.value + eta * t.e2.value * t.ea.value;
  if (!(std::abs(det) <= 1e-9)) {
    std::ostringstream os;
    os << "null_mode: psi(mu T^alpha) = " << det
       << " is not numerically zero; T is not exceptional for this mode";
    throw std::invalid_argument(os.str());
  }
  double a0 = T * t.e2.value;
  double b0 = -t.e1.value;
  double norm = std::hypot(a0, b0);
  if (norm < 1e-12)
    throw degenerate_mode_error("null_mode: datum vanished; contradicts (a,b) != (0,0)");
  return {a0 / norm, b0 / norm};
}

OdeState ode_forward(double lambda, double a, double b, double alpha, double t) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ode_forward: lambda must be > 0");
  Spectrum s = user_spectrum({lambda}, {1});
  SpectralCoeffs ca, cb;
  ca.modes = {{a}};
  cb.modes = {{b}};
  EvolvedState ev = forward(s, ca, cb, alpha, t);
  return {ev.u.modes[0][0], ev.du.modes[0][0]};
}

OdeBackwardResult ode_backward(double lambda, double aT, double bT, double alpha, double T,
                               double psi_floor) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ode_backward: lambda must be > 0");
  Spectrum s = user_spectrum({lambda}, {1});
  SpectralCoeffs cp, cq;
  cp.modes = {{aT}};
  cq.modes = {{bT}};
  BackwardOptions opts;
  opts.psi_floor = psi_floor;
  BackwardResult r = backward(s, cp, cq, alpha, T, opts);
  return {r.a.modes[0][0], r.b.modes[0][0], r.diag};
}

}  // namespace fdw
