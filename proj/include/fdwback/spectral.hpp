#pragma once

#include <cstddef>
#include <vector>

#include "fdwback/errors.hpp"

namespace fdw {

enum class SpectrumKind { dirichlet_laplacian_1d, user_supplied };

/// Ordered positive eigenvalues with multiplicities.  The built-in kind
/// remembers the interval length so grid synthesis knows its eigenfunctions.
struct Spectrum {
  SpectrumKind kind = SpectrumKind::user_supplied;
  double length = 0.0;  // interval length for the built-in operator
  std::vector<double> eigenvalues;     // strictly increasing, > 0
  std::vector<std::size_t> multiplicities;  // >= 1, same size

  std::size_t mode_count() const { return eigenvalues.size(); }
  std::size_t coeff_count() const;
  double mu(std::size_t n) const { return eigenvalues[n]; }
  double mu_min() const { return eigenvalues.front(); }

  void validate() const;
};

/// mu_n = (n pi / L)^2, multiplicity 1, eigenfunctions sqrt(2/L) sin(n pi x / L).
Spectrum dirichlet_laplacian_1d(double length, std::size_t n_modes);

Spectrum user_spectrum(std::vector<double> eigenvalues,
                       std::vector<std::size_t> multiplicities);

/// Coefficients a_{nj} of a function in the eigenbasis, stored per mode.
struct SpectralCoeffs {
  std::vector<std::vector<double>> modes;

  static SpectralCoeffs zeros_like(const Spectrum& s);
  std::size_t total() const;
  bool shape_matches(const Spectrum& s) const;
};

/// Samples on the uniform interior grid x_i = i L/(M+1), i = 1..M;
/// Dirichlet endpoints are implied zero.
struct GridFunction {
  double length = 0.0;
  std::vector<double> samples;
};

/// Trapezoid inner products against the sine eigenfunctions; exact for
/// band-limited inputs on the interior grid.  Requires the built-in
/// spectrum and grid size >= 2 * mode count (else an aliasing error).
SpectralCoeffs project(const GridFunction& f, const Spectrum& s);

/// Synthesis sum c_n phi_n on a fresh interior grid of the given size.
GridFunction evaluate(const SpectralCoeffs& c, const Spectrum& s, std::size_t grid_size);

double norm_l2(const SpectralCoeffs& c);
double norm_h2(const SpectralCoeffs& c, const Spectrum& s);

}  // namespace fdw
