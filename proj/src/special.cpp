#include "fdwback/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fdwback/contour.hpp"

namespace fdw {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRelTol = 2.5e-11;      // internal certification target
constexpr double kSeriesEtaMax = 8.0;    // series regime boundary
constexpr double kSeriesStopRel = 1e-18;
constexpr std::size_t kSeriesCap = 400;
constexpr std::size_t kAsymCap = 400;

double sin_pi(double x) {
  // exact range reduction keeps the sign correct near integers
  double r = std::remainder(x, 2.0);
  return std::sin(kPi * r);
}

double log_abs_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

// sign of Gamma(x) for non-pole x; via reflection for x < 0
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return sin_pi(x) < 0.0 ? -1.0 : 1.0;
}

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// magnitude of the exponentially small component of E_{a,b}(-eta);
// decisive for how far the algebraic expansion can be trusted
double oscillatory_bound(double alpha, double beta, double eta) {
  if (eta <= 0.0) return 1.0;
  double s = std::pow(eta, 1.0 / alpha);
  double decay = std::cos(kPi / alpha);  // < 0 for alpha in (1,2), 0 at alpha = 2
  double lg = ((1.0 - beta) / alpha) * std::log(eta) + s * decay;
  return (2.0 / alpha) * std::exp(std::min(lg, 700.0));
}

double certify_scale(double alpha, double beta, double eta, double value) {
  // natural magnitude of E_{a,b}(-eta): the leading algebraic terms, or the
  // oscillation envelope where those vanish (beta - alpha at a gamma pole)
  if (eta <= 1.0) return std::max(std::abs(value), 0.5);
  double lead = std::abs(rgamma(beta - alpha)) / eta;
  double lead2 = std::abs(rgamma(beta - 2.0 * alpha)) / (eta * eta);
  double env = oscillatory_bound(alpha, beta, eta);
  return std::max({std::abs(value), lead, lead2, env});
}

struct AsymTerm {
  double value = 0.0;  // signed term, 0 on gamma poles
  double mag = 0.0;    // magnitude (0 on poles)
};

AsymTerm asym_term(double alpha, double beta, double eta, std::size_t k) {
  double arg = beta - alpha * static_cast<double>(k);
  if (is_gamma_pole(arg)) return {};
  double lm = -static_cast<double>(k) * std::log(eta) - log_abs_gamma(arg);
  if (lm > 700.0) return {std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity()};
  double mag = std::exp(lm);
  double sgn = gamma_sign(arg) * ((k % 2 == 1) ? 1.0 : -1.0);
  return {sgn * mag, mag};
}

double first_omitted_magnitude(double alpha, double beta, double eta, std::size_t terms) {
  for (std::size_t k = terms + 1; k <= terms + 8; ++k) {
    AsymTerm t = asym_term(alpha, beta, eta, k);
    if (t.mag > 0.0) return t.mag;
  }
  return 0.0;
}

}  // namespace

const char* to_string(MlRegime r) {
  switch (r) {
    case MlRegime::series: return "series";
    case MlRegime::contour: return "contour";
    case MlRegime::asymptotic: return "asymptotic";
  }
  return "?";
}

bool is_gamma_pole(double x) {
  if (x > 0.5) return false;
  double n = std::nearbyint(x);
  if (n > 0.5) return false;
  return std::abs(x - n) <= 8.0 * kEps * std::max(1.0, std::abs(x));
}

double gamma_fn(double x) {
  if (is_gamma_pole(x)) {
    std::ostringstream os;
    os << "gamma pole at x = " << x;
    throw pole_error(os.str());
  }
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (x >= 0.5) {
    double g = std::tgamma(x);
    return std::isinf(g) ? 0.0 : 1.0 / g;
  }
  // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi, safe in log space
  double lg = log_abs_gamma(1.0 - x);
  double sp = sin_pi(x);
  double lv = lg + std::log(std::abs(sp)) - std::log(kPi);
  double sgn = sp < 0.0 ? -1.0 : 1.0;
  if (lv > 709.0) return sgn * std::numeric_limits<double>::infinity();
  return sgn * std::exp(lv);
}

void MlQuery::validate() const {
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("ml: alpha must lie in (1, 2]");
  if (!(beta > 0.0)) throw std::invalid_argument("ml: beta must be positive");
  if (!(eta >= 0.0)) throw std::invalid_argument("ml: eta must be non-negative");
}

MlValue ml_series(const MlQuery& q) {
  q.validate();
  const double z = -q.eta;
  KahanSum sum;
  double abs_sum = 0.0;
  double pw = 1.0;
  double last_mag = 0.0;
  for (std::size_t k = 0; k < kSeriesCap; ++k) {
    double term = pw * rgamma(q.alpha * static_cast<double>(k) + q.beta);
    sum.add(term);
    last_mag = std::abs(term);
    abs_sum += last_mag;
    if (k > 0 && last_mag < kSeriesStopRel * std::abs(sum.s)) break;
    pw *= z;
    if (!std::isfinite(pw)) break;
  }
  MlValue out;
  out.value = sum.s;
  out.abs_error_estimate = last_mag + 4.0 * kEps * abs_sum;
  out.regime = MlRegime::series;
  return out;
}

std::size_t ml_asymptotic_optimal_terms(const MlQuery& q) {
  q.validate();
  if (!(q.eta > 1.0)) throw std::invalid_argument("ml_asymptotic: eta too small");
  double prev = std::numeric_limits<double>::infinity();
  std::size_t last_decreasing = 1;
  for (std::size_t k = 1; k <= kAsymCap; ++k) {
    AsymTerm t = asym_term(q.alpha, q.beta, q.eta, k);
    if (t.mag == 0.0) continue;  // pole coefficient, skip
    if (t.mag >= prev) return last_decreasing;
    prev = t.mag;
    last_decreasing = k;
  }
  return last_decreasing;
}

MlValue ml_asymptotic(const MlQuery& q, std::size_t terms) {
  q.validate();
  if (!(q.eta >= 10.0))
    throw std::invalid_argument("ml_asymptotic: eta too small for the large-argument expansion");
  if (terms == 0) throw std::invalid_argument("ml_asymptotic: terms must be >= 1");
  KahanSum sum;
  for (std::size_t k = 1; k <= terms; ++k) {
    AsymTerm t = asym_term(q.alpha, q.beta, q.eta, k);
    if (!std::isfinite(t.value)) break;
    sum.add(t.value);
  }
  MlValue out;
  out.value = sum.s;
  // truncation plus the exponentially small oscillatory component the
  // algebraic expansion cannot see
  out.abs_error_estimate = first_omitted_magnitude(q.alpha, q.beta, q.eta, terms) +
                           oscillatory_bound(q.alpha, q.beta, q.eta);
  out.regime = MlRegime::asymptotic;
  return out;
}

namespace {

bool try_asymptotic(const MlQuery& q, MlValue& out) {
  if (q.eta < 50.0) return false;
  std::size_t k_opt = ml_asymptotic_optimal_terms(q);
  MlValue v = ml_asymptotic(q, k_opt);  // estimate already includes the oscillatory part
  double scale = certify_scale(q.alpha, q.beta, q.eta, v.value);
  if (v.abs_error_estimate <= kRelTol * scale) {
    out = v;
    return true;
  }
  return false;
}

MlValue ml_contour(const MlQuery& q, const ContourQuadrature& quad) {
  // twice-expanded representation: two algebraic terms plus a remainder
  // integral whose size matches the slowest function decay (~eta^-2)
  const double eta = q.eta;
  const double a1 = rgamma(q.beta - q.alpha);
  const double a2 = rgamma(q.beta - 2.0 * q.alpha);
  const double power = (1.0 - q.beta) / q.alpha + 2.0;
  auto pi_ = quad.integral_with_pole(power, eta);
  const double pref = 1.0 / (2.0 * kPi * q.alpha * eta * eta);
  const double remainder = pi_.value.imag() * pref;
  MlValue out;
  out.value = a1 / eta - a2 / (eta * eta) + remainder;
  out.abs_error_estimate = kEps * (std::abs(a1) / eta + std::abs(a2) / (eta * eta)) +
                           pref * (8.0 * kEps + ContourConfig::kTailTarget) * pi_.abs_sum +
                           pref * std::abs(pi_.value.real());  // imaginary-part leakage
  out.regime = MlRegime::contour;
  return out;
}

MlValue certify_or_throw(const MlQuery& q, MlValue v) {
  double scale = certify_scale(q.alpha, q.beta, q.eta, v.value);
  if (v.abs_error_estimate <= kRelTol * scale) return v;
  std::ostringstream os;
  os << "ml: no regime certifies the tolerance at alpha=" << q.alpha << " beta=" << q.beta
     << " eta=" << q.eta << " (best estimate " << v.abs_error_estimate << ")";
  throw accuracy_error(os.str());
}

}  // namespace

MlValue ml(const MlQuery& q) {
  q.validate();
  if (q.eta <= kSeriesEtaMax) return ml_series(q);
  MlValue v;
  if (try_asymptotic(q, v)) return v;
  if (q.alpha < 2.0 - 1e-9) {
    ContourConfig cfg;
    try {
      auto quad = contour_quadrature(q.alpha, cfg);
      return certify_or_throw(q, ml_contour(q, *quad));
    } catch (const convergence_error& e) {
      throw accuracy_error(std::string("ml: contour regime unavailable: ") + e.what());
    }
  }
  // alpha = 2: the contour is degenerate; stretch the series and let its
  // cancellation estimate decide
  return certify_or_throw(q, ml_series(q));
}

MlTriple ml_triple(double alpha, double eta) {
  MlQuery q1{alpha, 1.0, eta}, q2{alpha, 2.0, eta}, qa{alpha, alpha, eta};
  MlTriple t;
  if (eta <= kSeriesEtaMax) {
    t.e1 = ml_series(q1);
    t.e2 = ml_series(q2);
    t.ea = ml_series(qa);
    return t;
  }
  MlValue v1, v2, va;
  if (try_asymptotic(q1, v1) && try_asymptotic(q2, v2) && try_asymptotic(qa, va)) {
    t.e1 = v1;
    t.e2 = v2;
    t.ea = va;
    return t;
  }
  if (alpha >= 2.0 - 1e-9) {
    t.e1 = certify_or_throw(q1, ml_series(q1));
    t.e2 = certify_or_throw(q2, ml_series(q2));
    t.ea = certify_or_throw(qa, ml_series(qa));
    return t;
  }
  ContourConfig cfg;
  try {
    auto quad = contour_quadrature(alpha, cfg);
    t.e1 = certify_or_throw(q1, ml_contour(q1, *quad));
    t.e2 = certify_or_throw(q2, ml_contour(q2, *quad));
    t.ea = certify_or_throw(qa, ml_contour(qa, *quad));
  } catch (const convergence_error& e) {
    throw accuracy_error(std::string("ml: contour regime unavailable: ") + e.what());
  }
  return t;
}

}  // namespace fdw
