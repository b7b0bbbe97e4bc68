#pragma once

#include <cstddef>
#include <vector>

#include "fdwback/psi.hpp"
#include "fdwback/spectral.hpp"

namespace fdw {

/// Per-mode final-value system [[e1, T e2], [-mu T^{a-1} ea, e1]] with
/// determinant psi(mu T^alpha).
struct ModeMatrix {
  double e1 = 0.0;  // E_{a,1}(-mu T^a)
  double e2 = 0.0;  // E_{a,2}(-mu T^a)
  double ea = 0.0;  // E_{a,a}(-mu T^a)
  double mu = 0.0;
  double T = 0.0;
  double alpha = 0.0;
  double det = 0.0;
};

ModeMatrix mode_matrix(double alpha, double mu, double T);

struct BackwardDiagnostics {
  double min_abs_psi = 0.0;
  std::size_t argmin_mode = 0;        // 1-based mode index
  double nearest_exceptional_T = 0.0; // closest member of Lambda to the used T
  double condition_estimate = 1.0;    // empirical two-sided stability ratio, >= 1
};

struct LambdaEntry {
  double T = 0.0;
  std::size_t mode_index = 0;  // 1-based n
  std::size_t zero_index = 0;  // 1-based k
};

/// Exceptional final times T = (eta_k / mu_n)^{1/alpha}, sorted by T.
struct Lambda {
  std::vector<LambdaEntry> entries;
};

struct EvolvedState {
  SpectralCoeffs u;
  SpectralCoeffs du;
};

/// Spectral forward evolution of (1.3)-type data:
///   u_{nj}(t)  = a_{nj} E_{a,1}(-mu_n t^a) + b_{nj} t E_{a,2}(-mu_n t^a)
///   u'_{nj}(t) = -mu_n t^{a-1} a_{nj} E_{a,a}(-mu_n t^a) + b_{nj} E_{a,1}(-mu_n t^a)
/// At t = 0 this returns (a, b) exactly.
EvolvedState forward(const Spectrum& s, const SpectralCoeffs& a, const SpectralCoeffs& b,
                     double alpha, double t, int threads = 1);

struct BackwardOptions {
  double psi_floor = 1e-8;  // below it, reconstruction is refused as ill-posed
  bool force = false;       // pass offending modes through as zeros instead
  const ZeroSet* zeros = nullptr;  // used for nearest_exceptional_T; computed if null
  int threads = 1;
};

struct BackwardResult {
  SpectralCoeffs a;
  SpectralCoeffs b;
  BackwardDiagnostics diag;
  std::vector<std::size_t> forced_modes;  // 1-based, non-empty only with force
};

/// Per-mode inversion of the final-value system:
///   a_{nj} = (p_{nj} e1 - q_{nj} T e2) / psi(mu_n T^a)
///   b_{nj} = (p_{nj} mu_n T^{a-1} ea + q_{nj} e1) / psi(mu_n T^a)
/// Throws ill_posed_error listing every mode with |det| < psi_floor.
BackwardResult backward(const Spectrum& s, const SpectralCoeffs& p, const SpectralCoeffs& q,
                        double alpha, double T, const BackwardOptions& opts = {});

/// All exceptional times up to T_max for the truncated spectrum.
Lambda exceptional_set(const Spectrum& s, const ZeroSet& z, double alpha, double T_max);

/// Unit-norm datum (a0, b0) on a single mode that the evolution annihilates
/// at T; requires |psi(mu_n0 T^alpha)| <= 1e-9.
struct NullModeDatum {
  double a0 = 0.0;
  double b0 = 0.0;
};

NullModeDatum null_mode(double alpha, double mu_n0, double T);

/// Scalar fractional ODE d_t^alpha v = -lambda v.
struct OdeState {
  double v = 0.0;
  double dv = 0.0;
};

OdeState ode_forward(double lambda, double a, double b, double alpha, double t);

struct OdeBackwardResult {
  double a = 0.0;
  double b = 0.0;
  BackwardDiagnostics diag;
};

OdeBackwardResult ode_backward(double lambda, double aT, double bT, double alpha, double T,
                               double psi_floor = 1e-8);

}  // namespace fdw
