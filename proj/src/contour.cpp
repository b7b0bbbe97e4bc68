#include "fdwback/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "fdwback/special.hpp"

namespace fdw {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kNodesPerPanel = 32;

struct GaussRule {
  std::vector<double> x, w;  // on [-1, 1]
};

// Newton iteration on the Legendre recurrence.
GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = x;
    rule.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& gl32() {
  static const GaussRule rule = gauss_legendre(kNodesPerPanel);
  return rule;
}

void validate_alpha_open(double alpha) {
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::invalid_argument("contour: alpha must lie in the open interval (1, 2)");
}

}  // namespace

double default_theta(double alpha) {
  validate_alpha_open(alpha);
  return 0.5 * (kPi * alpha / 2.0 + kPi);
}

ContourQuadrature::ContourQuadrature(double alpha, const ContourConfig& cfg) : alpha_(alpha) {
  validate_alpha_open(alpha);
  theta_ = cfg.theta > 0.0 ? cfg.theta : default_theta(alpha);
  if (!(theta_ > kPi * alpha / 2.0) || !(theta_ < kPi)) {
    std::ostringstream os;
    os << "contour: theta = " << theta_ << " outside (pi*alpha/2, pi) for alpha = " << alpha;
    throw std::invalid_argument(os.str());
  }
  int panels = std::max(8, cfg.panels);
  const GaussRule& gl = gl32();

  auto push_node = [&](std::complex<double> zeta, std::complex<double> oriented_w,
                       std::complex<double> zeta_pow_arg, std::complex<double> log_zeta) {
    std::complex<double> e = std::exp(zeta_pow_arg);
    zeta_.push_back(zeta);
    w_plain_.push_back(oriented_w);
    w_exp_.push_back(oriented_w * e);
    abs_w_exp_.push_back(std::abs(oriented_w) * std::exp(zeta_pow_arg.real()));
    log_zeta_.push_back(log_zeta);
  };

  // unit arc, phi in [-theta, theta], uniform panels
  {
    double h = 2.0 * theta_ / panels;
    for (int p = 0; p < panels; ++p) {
      double lo = -theta_ + p * h;
      for (int i = 0; i < kNodesPerPanel; ++i) {
        double phi = lo + 0.5 * h * (gl.x[i] + 1.0);
        std::complex<double> zeta = std::polar(1.0, phi);
        std::complex<double> dw = std::complex<double>(0.0, 1.0) * zeta * (0.5 * h * gl.w[i]);
        std::complex<double> pow_arg = std::polar(1.0, phi / alpha);
        push_node(zeta, dw, pow_arg, std::complex<double>(0.0, phi));
      }
    }
  }

  // rays, panelled uniformly in s = r^{1/alpha}: the integrand envelope is
  // exp(cos(theta/alpha) s) and the phase advances at sin(theta/alpha)/unit s,
  // so fixed-width panels keep Gauss-Legendre spectrally exact
  {
    const double c = std::cos(theta_ / alpha);  // < 0 in the admissible wedge
    const double width = 8.0 * 64.0 / panels;
    const double s_peak = (3.0 * alpha - 1.0) / std::abs(c);  // monitor integrand max
    double s_cap = std::pow(ContourConfig::kRayCap, 1.0 / alpha);
    if (cfg.ray_truncation > 0.0) s_cap = std::pow(cfg.ray_truncation, 1.0 / alpha);

    double accum = 0.0;
    double s_lo = 1.0;
    bool converged = false;
    while (!converged) {
      if (s_lo >= s_cap) {
        std::ostringstream os;
        os << "contour: ray tail criterion unmet at R_max = " << std::pow(s_cap, alpha)
           << " (alpha = " << alpha << ", theta = " << theta_ << ")";
        throw convergence_error(os.str());
      }
      double s_hi = std::min(s_lo + width, s_cap);
      double contrib = 0.0;
      for (int i = 0; i < kNodesPerPanel; ++i) {
        double s = s_lo + 0.5 * (s_hi - s_lo) * (gl.x[i] + 1.0);
        double hw = 0.5 * (s_hi - s_lo) * gl.w[i];
        double r = std::pow(s, alpha);
        double jac = alpha * std::pow(s, alpha - 1.0);  // |dzeta| = jac ds
        double log_r = alpha * std::log(s);
        // upper ray, oriented outward (+); exp factor exp(s e^{i theta/alpha})
        push_node(std::polar(r, theta_), std::polar(jac * hw, theta_),
                  std::polar(s, theta_ / alpha), std::complex<double>(log_r, theta_));
        // lower ray, traversed toward the arc (-)
        push_node(std::polar(r, -theta_), -std::polar(jac * hw, -theta_),
                  std::polar(s, -theta_ / alpha), std::complex<double>(log_r, -theta_));
        contrib += hw * jac * std::exp(c * s) * std::exp(2.0 * log_r);  // monitor power |zeta|^2
      }
      accum += contrib;
      if (s_hi >= s_peak && contrib < ContourConfig::kTailTarget * accum) converged = true;
      s_lo = s_hi;
    }
    r_max_ = std::pow(s_lo, alpha);
  }

  for (double p : {1.0, 1.0 - 1.0 / alpha, 1.0 + 1.0 / alpha, 2.0, 2.0 - 1.0 / alpha}) {
    PowCache c;
    c.power = p;
    c.f.resize(zeta_.size());
    c.abs_f.resize(zeta_.size());
    for (std::size_t i = 0; i < zeta_.size(); ++i) {
      std::complex<double> zp = std::exp(p * log_zeta_[i]);
      c.f[i] = w_exp_[i] * zp;
      c.abs_f[i] = abs_w_exp_[i] * std::exp(p * log_zeta_[i].real());
    }
    pow_cache_.push_back(std::move(c));
  }
}

const ContourQuadrature::PowCache* ContourQuadrature::find_pow_cache(double power) const {
  for (const auto& c : pow_cache_) {
    if (std::abs(c.power - power) <= 1e-14 * std::max(1.0, std::abs(power))) return &c;
  }
  return nullptr;
}

ContourQuadrature::PoleIntegral ContourQuadrature::integral_with_pole(double power,
                                                                      double eta) const {
  if (!(eta * std::abs(std::cos(theta_)) >= 1.0 - 1e-12)) {
    std::ostringstream os;
    os << "contour: pole separation requires eta >= 1/|cos theta| = "
       << 1.0 / std::abs(std::cos(theta_)) << ", got " << eta;
    throw std::invalid_argument(os.str());
  }
  // The pole at zeta = -eta passes within eta*sin(theta) of the rays, which
  // for theta near pi is far too close for fixed panels.  Subtract the
  // integrand's pole value and add the exactly integrable remainder:
  //   int g(z)/(z+eta) dz = int (g(z)-g_p)/(z+eta) dz + g_p * Log-telescope.
  // g has its branch cut through the pole, so each half of the contour
  // subtracts its own boundary value (g_p above, conj(g_p) below), split at
  // the positive real axis.  The subtracted integrand is then smooth through
  // both closest approaches, and the carried term supplies the exponentially
  // small oscillatory component of the function.
  const double s_pole = std::pow(eta, 1.0 / alpha_);
  const std::complex<double> w_pole = std::polar(s_pole, kPi / alpha_);
  const std::complex<double> g_pole =
      std::exp(w_pole) * std::exp(power * std::complex<double>(std::log(eta), kPi));
  const std::complex<double> g_pole_lo = std::conj(g_pole);
  std::complex<double> acc(0.0, 0.0);
  double abs_acc = 0.0;
  const std::size_t n = zeta_.size();
  const PowCache* cache = find_pow_cache(power);
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> a;
    double abs_a;
    if (cache) {
      a = cache->f[i];
      abs_a = cache->abs_f[i];
    } else {
      std::complex<double> zp = std::exp(power * log_zeta_[i]);
      a = w_exp_[i] * zp;
      abs_a = abs_w_exp_[i] * std::exp(power * log_zeta_[i].real());
    }
    std::complex<double> den = zeta_[i] + eta;
    std::complex<double> inv = std::conj(den) / std::norm(den);
    std::complex<double> b = w_plain_[i] * (log_zeta_[i].imag() > 0.0 ? g_pole : g_pole_lo);
    acc += (a - b) * inv;
    abs_acc += (abs_a + std::sqrt(std::norm(b))) * std::sqrt(std::norm(inv));
  }
  const std::complex<double> end = std::polar(r_max_, theta_);
  const std::complex<double> log_mid = std::log(std::complex<double>(1.0 + eta, 0.0));
  const std::complex<double> carried = g_pole * (std::log(end + eta) - log_mid) +
                                       g_pole_lo * (log_mid - std::log(std::conj(end) + eta));
  acc += carried;
  abs_acc += std::abs(carried);
  return {acc, abs_acc};
}

double ContourQuadrature::arclength_integral(double power) const {
  double acc = 0.0;
  const std::size_t n = zeta_.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc += abs_w_exp_[i] * std::exp(power * log_zeta_[i].real());
  }
  return acc;
}

std::shared_ptr<const ContourQuadrature> contour_quadrature(double alpha,
                                                            const ContourConfig& cfg) {
  using Key = std::tuple<double, double, int, double>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ContourQuadrature>> cache;
  double theta = cfg.theta > 0.0 ? cfg.theta : default_theta(alpha);
  Key key{alpha, theta, cfg.panels, cfg.ray_truncation};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto quad = std::make_shared<const ContourQuadrature>(alpha, cfg);
  cache.emplace(key, quad);
  return quad;
}

std::array<double, 3> kappa_constants(double alpha) {
  validate_alpha_open(alpha);
  double g = gamma_fn(-alpha);  // > 0 for alpha in (1,2)
  double k3 = 1.0 / g;
  double k1 = k3 / alpha;
  double k2 = k3 / (alpha * alpha - alpha);
  return {k1, k2, k3};
}

NuValues nu_integrals(double alpha, const ContourConfig& cfg) {
  auto quad = contour_quadrature(alpha, cfg);
  double pref = 1.0 / (2.0 * kPi * alpha * std::sin(quad->theta()));
  NuValues nu;
  nu.nu1 = pref * quad->arclength_integral(1.0);
  nu.nu2 = pref * quad->arclength_integral(1.0 - 1.0 / alpha);
  nu.nu3 = pref * quad->arclength_integral(1.0 + 1.0 / alpha);
  return nu;
}

BoundReport bound_report(double alpha, const ContourConfig& cfg) {
  auto quad = contour_quadrature(alpha, cfg);
  auto [k1, k2, k3] = kappa_constants(alpha);
  NuValues nu = nu_integrals(alpha, cfg);
  double g = gamma_fn(-alpha);
  double lemma2 = alpha * alpha * (alpha - 1.0) * g * g *
                  (k2 * nu.nu3 + k3 * nu.nu2 + 2.0 * k1 * nu.nu1 + nu.nu1 * nu.nu1 +
                   nu.nu2 * nu.nu3);
  BoundReport rep;
  rep.kappa1 = k1;
  rep.kappa2 = k2;
  rep.kappa3 = k3;
  rep.nu1 = nu.nu1;
  rep.nu2 = nu.nu2;
  rep.nu3 = nu.nu3;
  rep.theta_used = quad->theta();
  rep.eta_bound = std::max(1.0 / std::abs(std::cos(quad->theta())), lemma2);
  return rep;
}

double eta_upper_bound(double alpha, const ContourConfig& cfg) {
  return bound_report(alpha, cfg).eta_bound;
}

double safe_time_threshold(double alpha, double mu_min, const ContourConfig& cfg) {
  if (!(mu_min > 0.0)) throw std::invalid_argument("safe_time_threshold: mu_min must be > 0");
  return std::pow(eta_upper_bound(alpha, cfg) / mu_min, 1.0 / alpha);
}

ContourRemainders contour_remainders(const ContourQuadrature& quad, double eta) {
  const double alpha = quad.alpha();
  ContourRemainders out;
  // once-expanded remainders for beta = 1, 2 and the twice-expanded one
  // for beta = alpha, matching the bound machinery
  auto s1 = quad.integral_with_pole(1.0, eta);
  auto s2 = quad.integral_with_pole(1.0 - 1.0 / alpha, eta);
  auto sa = quad.integral_with_pole(1.0 + 1.0 / alpha, eta);
  double pref1 = 1.0 / (2.0 * kPi * alpha * eta);
  double prefa = 1.0 / (2.0 * kPi * alpha * eta * eta);
  out.i1 = -s1.value.imag() * pref1;
  out.i2 = -s2.value.imag() * pref1;
  out.ia = sa.value.imag() * prefa;
  double tail = ContourConfig::kTailTarget + 8.0 * kEps;
  out.abs_err = tail * std::max(pref1 * std::max(s1.abs_sum, s2.abs_sum), prefa * sa.abs_sum);
  return out;
}

ContourRemainders contour_remainders(double alpha, double eta, const ContourConfig& cfg) {
  return contour_remainders(*contour_quadrature(alpha, cfg), eta);
}

}  // namespace fdw
