#include "fdwback/spectral.hpp"

#include <cmath>
#include <sstream>

namespace fdw {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::size_t Spectrum::coeff_count() const {
  std::size_t n = 0;
  for (std::size_t m : multiplicities) n += m;
  return n;
}

void Spectrum::validate() const {
  if (eigenvalues.empty()) throw std::invalid_argument("spectrum: no eigenvalues");
  if (eigenvalues.size() != multiplicities.size())
    throw std::invalid_argument("spectrum: eigenvalue/multiplicity size mismatch");
  double prev = 0.0;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (!(eigenvalues[i] > prev))
      throw std::invalid_argument("spectrum: eigenvalues must be strictly increasing and > 0");
    if (multiplicities[i] < 1) throw std::invalid_argument("spectrum: multiplicity < 1");
    prev = eigenvalues[i];
  }
}

Spectrum dirichlet_laplacian_1d(double length, std::size_t n_modes) {
  if (!(length > 0.0)) throw std::invalid_argument("dirichlet_laplacian_1d: length must be > 0");
  if (n_modes == 0) throw std::invalid_argument("dirichlet_laplacian_1d: need n_modes >= 1");
  Spectrum s;
  s.kind = SpectrumKind::dirichlet_laplacian_1d;
  s.length = length;
  s.eigenvalues.reserve(n_modes);
  s.multiplicities.assign(n_modes, 1);
  for (std::size_t n = 1; n <= n_modes; ++n) {
    double k = static_cast<double>(n) * kPi / length;
    s.eigenvalues.push_back(k * k);
  }
  return s;
}

Spectrum user_spectrum(std::vector<double> eigenvalues, std::vector<std::size_t> multiplicities) {
  Spectrum s;
  s.kind = SpectrumKind::user_supplied;
  s.eigenvalues = std::move(eigenvalues);
  s.multiplicities = std::move(multiplicities);
  s.validate();
  return s;
}

SpectralCoeffs SpectralCoeffs::zeros_like(const Spectrum& s) {
  SpectralCoeffs c;
  c.modes.resize(s.mode_count());
  for (std::size_t n = 0; n < s.mode_count(); ++n) c.modes[n].assign(s.multiplicities[n], 0.0);
  return c;
}

std::size_t SpectralCoeffs::total() const {
  std::size_t n = 0;
  for (const auto& m : modes) n += m.size();
  return n;
}

bool SpectralCoeffs::shape_matches(const Spectrum& s) const {
  if (modes.size() != s.mode_count()) return false;
  for (std::size_t n = 0; n < modes.size(); ++n)
    if (modes[n].size() != s.multiplicities[n]) return false;
  return true;
}

SpectralCoeffs project(const GridFunction& f, const Spectrum& s) {
  if (s.kind != SpectrumKind::dirichlet_laplacian_1d)
    throw std::invalid_argument("project: needs the built-in 1-d Dirichlet Laplacian");
  if (std::abs(f.length - s.length) > 1e-12 * s.length)
    throw std::invalid_argument("project: grid length does not match the operator interval");
  for (double v : f.samples)
    if (!std::isfinite(v)) throw std::invalid_argument("project: non-finite sample");
  const std::size_t m = f.samples.size();
  const std::size_t n_modes = s.mode_count();
  if (m < 2 * n_modes) {
    std::ostringstream os;
    os << "project: grid of " << m << " points aliases " << n_modes
       << " modes (need at least " << 2 * n_modes << ")";
    throw std::invalid_argument(os.str());
  }
  const double L = s.length;
  const double dx = L / static_cast<double>(m + 1);
  const double scale = std::sqrt(2.0 / L);
  SpectralCoeffs c = SpectralCoeffs::zeros_like(s);
  for (std::size_t n = 0; n < n_modes; ++n) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
      double phase = static_cast<double>(n + 1) * kPi * static_cast<double>(i) /
                     static_cast<double>(m + 1);
      acc += f.samples[i - 1] * std::sin(phase);
    }
    c.modes[n][0] = dx * scale * acc;
  }
  return c;
}

GridFunction evaluate(const SpectralCoeffs& c, const Spectrum& s, std::size_t grid_size) {
  if (s.kind != SpectrumKind::dirichlet_laplacian_1d)
    throw std::invalid_argument("evaluate: needs the built-in 1-d Dirichlet Laplacian");
  if (!c.shape_matches(s)) throw std::invalid_argument("evaluate: coefficient shape mismatch");
  if (grid_size < 2 * s.mode_count())
    throw std::invalid_argument("evaluate: grid too coarse for the mode count");
  const double L = s.length;
  const double scale = std::sqrt(2.0 / L);
  GridFunction f;
  f.length = L;
  f.samples.assign(grid_size, 0.0);
  for (std::size_t i = 1; i <= grid_size; ++i) {
    double acc = 0.0;
    for (std::size_t n = 0; n < s.mode_count(); ++n) {
      double phase = static_cast<double>(n + 1) * kPi * static_cast<double>(i) /
                     static_cast<double>(grid_size + 1);
      acc += c.modes[n][0] * std::sin(phase);
    }
    f.samples[i - 1] = scale * acc;
  }
  return f;
}

double norm_l2(const SpectralCoeffs& c) {
  double acc = 0.0;
  for (const auto& mode : c.modes)
    for (double v : mode) acc += v * v;
  return std::sqrt(acc);
}

double norm_h2(const SpectralCoeffs& c, const Spectrum& s) {
  if (!c.shape_matches(s)) throw std::invalid_argument("norm_h2: coefficient shape mismatch");
  double acc = 0.0;
  for (std::size_t n = 0; n < c.modes.size(); ++n) {
    double mu2 = s.eigenvalues[n] * s.eigenvalues[n];
    for (double v : c.modes[n]) acc += mu2 * v * v;
  }
  return std::sqrt(acc);
}

}  // namespace fdw
