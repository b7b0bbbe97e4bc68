#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "fdwback/errors.hpp"

namespace fdw {

/// Integration-path parameters for the two-ray-plus-arc contour
/// (rays at angles +-theta for |zeta| >= 1, unit-circle arc in between).
struct ContourConfig {
  double theta = 0.0;           // 0 selects the midpoint of (pi*alpha/2, pi)
  double ray_truncation = 0.0;  // R_max; 0 grows geometrically until the tail criterion
  int panels = 64;              // arc panel count; also scales ray panel density

  static constexpr double kRayCap = 1e6;      // hard cap on R_max
  static constexpr double kTailTarget = 1e-16;
};

/// Midpoint of the admissible angle interval (pi*alpha/2, pi).
double default_theta(double alpha);

/// Fixed quadrature rule over the contour for one (alpha, theta) pair.
/// Nodes and the exponential factor exp(zeta^{1/alpha}) are precomputed;
/// rays are panelled uniformly in s = r^{1/alpha}, where the integrand
/// envelope is a plain exponential and the phase advances linearly.
class ContourQuadrature {
 public:
  ContourQuadrature(double alpha, const ContourConfig& cfg = {});

  struct PoleIntegral {
    std::complex<double> value;  // oriented integral of exp(zeta^{1/a}) zeta^p / (zeta+eta)
    double abs_sum;              // sum of |contribution|, for rounding estimates
  };

  /// Oriented contour integral with the pole factor 1/(zeta + eta), eta > 1/|cos theta|.
  PoleIntegral integral_with_pole(double power, double eta) const;

  /// Arclength integral of |exp(zeta^{1/alpha})| |zeta|^power over the contour.
  double arclength_integral(double power) const;

  double alpha() const { return alpha_; }
  double theta() const { return theta_; }
  double r_max() const { return r_max_; }
  std::size_t node_count() const { return zeta_.size(); }

 private:
  double alpha_ = 0.0;
  double theta_ = 0.0;
  double r_max_ = 0.0;
  // Node data: position, oriented weight (plain and premultiplied with
  // exp(zeta^{1/a})), and |weight * exp| for arclength/rounding sums.
  std::vector<std::complex<double>> zeta_;
  std::vector<std::complex<double>> w_plain_;
  std::vector<std::complex<double>> w_exp_;
  std::vector<double> abs_w_exp_;
  std::vector<std::complex<double>> log_zeta_;

  // premultiplied w_exp * zeta^p for the handful of powers the module
  // family actually uses; everything else falls back to exp(p log zeta)
  struct PowCache {
    double power;
    std::vector<std::complex<double>> f;
    std::vector<double> abs_f;
  };
  std::vector<PowCache> pow_cache_;
  const PowCache* find_pow_cache(double power) const;
};

/// Shared, lazily built quadrature for (alpha, theta); thread-safe.
std::shared_ptr<const ContourQuadrature> contour_quadrature(double alpha,
                                                            const ContourConfig& cfg = {});

/// kappa1 = 1/(alpha*Gamma(-alpha)), kappa2 = 1/((alpha^2-alpha)*Gamma(-alpha)),
/// kappa3 = 1/Gamma(-alpha); all positive for alpha in (1,2).
std::array<double, 3> kappa_constants(double alpha);

struct NuValues {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double nu3 = 0.0;
};

/// The three arclength integrals with powers |zeta|, |zeta^{1-1/alpha}|,
/// |zeta^{1+1/alpha}|, each scaled by 1/(2 pi alpha sin theta).
NuValues nu_integrals(double alpha, const ContourConfig& cfg = {});

struct BoundReport {
  double kappa1 = 0.0, kappa2 = 0.0, kappa3 = 0.0;
  double nu1 = 0.0, nu2 = 0.0, nu3 = 0.0;
  double eta_bound = 0.0;
  double theta_used = 0.0;
};

BoundReport bound_report(double alpha, const ContourConfig& cfg = {});

/// Upper bound on the largest zero of psi:
/// max{ 1/|cos theta|, alpha^2 (alpha-1) Gamma(-alpha)^2
///      (kappa2 nu3 + kappa3 nu2 + 2 kappa1 nu1 + nu1^2 + nu2 nu3) }.
double eta_upper_bound(double alpha, const ContourConfig& cfg = {});

/// (eta_upper_bound / mu_min)^{1/alpha}; every final time above it is
/// guaranteed well-posed for a spectrum whose smallest eigenvalue is mu_min.
double safe_time_threshold(double alpha, double mu_min, const ContourConfig& cfg = {});

/// Remainders of the algebraic-leading-term representation:
///   E_{a,1}(-eta) = -kappa1/eta   + i1
///   E_{a,2}(-eta) =  kappa2/eta   + i2
///   E_{a,a}(-eta) = -kappa3/eta^2 + ia
/// valid for eta > 1/|cos theta|.
struct ContourRemainders {
  double i1 = 0.0, i2 = 0.0, ia = 0.0;
  double abs_err = 0.0;  // rounding/tail estimate shared by the three values
};

ContourRemainders contour_remainders(double alpha, double eta, const ContourConfig& cfg = {});
ContourRemainders contour_remainders(const ContourQuadrature& quad, double eta);

}  // namespace fdw
