#pragma once

#include <cstddef>

#include "fdwback/errors.hpp"

namespace fdw {

/// Real Gamma function.  Negative non-integer arguments are supported;
/// throws pole_error at 0, -1, -2, ...
double gamma_fn(double x);

/// 1/Gamma(x).  Returns exactly 0 at the poles of Gamma (non-positive
/// integers, detected up to a few ulp so that arguments assembled from
/// inexact products still hit the zero coefficient they stand for).
double rgamma(double x);

/// True if x is (within a few ulp) a non-positive integer.
bool is_gamma_pole(double x);

enum class MlRegime { series, contour, asymptotic };

const char* to_string(MlRegime r);

/// Evaluation request for E_{alpha,beta}(-eta).
struct MlQuery {
  double alpha = 1.5;  // order, 1 < alpha <= 2 (alpha = 2 for closed-form tests only)
  double beta = 1.0;   // second parameter, > 0
  double eta = 0.0;    // argument is -eta, eta >= 0

  void validate() const;
};

struct MlValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // upper estimate of the truncation error
  MlRegime regime = MlRegime::series;
};

/// E_{alpha,beta}(-eta) with automatic regime selection.  Certifies a
/// relative accuracy of about 1e-10 or throws accuracy_error.
MlValue ml(const MlQuery& q);

/// Power-series evaluation (compensated summation, hard cap 400 terms).
/// Intended for small eta; the error estimate includes the cancellation
/// rounding floor, which grows with eta.
MlValue ml_series(const MlQuery& q);

/// Truncated large-argument expansion -sum_{k=1..terms} (-eta)^{-k}/Gamma(beta-alpha*k).
/// Terms whose Gamma coefficient sits on a pole contribute zero.  The error
/// estimate is the magnitude of the first omitted term; when `terms` exceeds
/// the optimal truncation index the estimate reflects the divergent growth.
MlValue ml_asymptotic(const MlQuery& q, std::size_t terms);

/// Index at which the asymptotic terms stop decreasing in magnitude.
std::size_t ml_asymptotic_optimal_terms(const MlQuery& q);

/// The three Mittag-Leffler values entering the mode determinant,
/// E_{a,1}(-eta), E_{a,2}(-eta), E_{a,a}(-eta), sharing one contour pass
/// in the mid-range regime.
struct MlTriple {
  MlValue e1;  // beta = 1
  MlValue e2;  // beta = 2
  MlValue ea;  // beta = alpha
};

MlTriple ml_triple(double alpha, double eta);

}  // namespace fdw
