#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdwback/contour.hpp"

namespace fdw {

/// psi(eta) = E_{a,1}(-eta)^2 + eta * E_{a,2}(-eta) * E_{a,a}(-eta).
/// psi(0) = 1; its positive zeros generate the exceptional final times.
double psi(double alpha, double eta);

/// Limit constant of eta^2 * psi(eta):  -1/(alpha^2 (alpha-1) Gamma(-alpha)^2) < 0.
double psi_leading_constant(double alpha);

struct ZeroBracket {
  double eta = 0.0;       // refined zero location
  double lo = 0.0;        // bracketing interval, psi(lo)*psi(hi) < 0
  double hi = 0.0;
  double residual = 0.0;  // |psi(eta)|
};

struct ZeroSet {
  double alpha = 0.0;
  std::vector<ZeroBracket> zeros;  // strictly increasing
  double search_ceiling = 0.0;
  std::vector<std::string> notes;  // near-tangency / refinement warnings
};

struct FindZerosOptions {
  std::size_t grid_points = 4096;      // linear points on [0, min(ceiling, 50)];
                                       // half as many log points cover the rest
  double bracket_tol = 1e-12;          // relative bracket width
  std::optional<double> ceiling_override;
  ContourConfig contour;               // used for the Lemma-2 ceiling
  int threads = 1;
};

/// All sign-change zeros of psi on [0, ceiling], ceiling = eta_upper_bound
/// unless overridden.  Non-empty for every alpha in (1,2); an empty scan
/// throws bracket_error.
ZeroSet find_zeros(double alpha, const FindZerosOptions& opts = {});

}  // namespace fdw
