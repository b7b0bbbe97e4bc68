#include "fdwback/psi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fdwback/special.hpp"
#include "parallel.hpp"

namespace fdw {

namespace {

constexpr double kPi = 3.14159265358979323846;

double psi_from_triple(const MlTriple& t, double eta) {
  return t.e1.value * t.e1.value + eta * t.e2.value * t.ea.value;
}

// End of the zone where the exponentially small component can still flip
// the sign of psi: beyond s with s|cos(pi/alpha)| >= 2 alpha ln s + 60 the
// envelope sits 60 nats under the algebraic tail.
double oscillation_end_s(double alpha) {
  double c = std::abs(std::cos(kPi / alpha));
  double s = 10.0;
  for (int i = 0; i < 200; ++i) s = (2.0 * alpha * std::log(std::max(s, 2.0)) + 60.0) / c;
  return s;
}

struct Refined {
  double lo, hi, root, f_root;
};

template <class F>
Refined bisect(const F& f, double lo, double hi, double flo, double fhi, double rel_tol) {
  for (int it = 0; it < 200 && (hi - lo) > rel_tol * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      flo = fhi = fm;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double root = 0.5 * (lo + hi);
  return {lo, hi, root, f(root)};
}

}  // namespace

double psi(double alpha, double eta) {
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::invalid_argument("psi: alpha must lie in (1, 2)");
  if (!(eta >= 0.0)) throw std::invalid_argument("psi: eta must be non-negative");
  MlTriple t = ml_triple(alpha, eta);
  return psi_from_triple(t, eta);
}

double psi_leading_constant(double alpha) {
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::invalid_argument("psi_leading_constant: alpha must lie in (1, 2)");
  double g = gamma_fn(-alpha);
  return -1.0 / (alpha * alpha * (alpha - 1.0) * g * g);
}

ZeroSet find_zeros(double alpha, const FindZerosOptions& opts) {
  if (!(alpha > 1.0) || !(alpha < 2.0))
    throw std::invalid_argument("find_zeros: alpha must lie in (1, 2)");
  ZeroSet out;
  out.alpha = alpha;
  double ceiling = opts.ceiling_override ? *opts.ceiling_override
                                         : eta_upper_bound(alpha, opts.contour);
  out.search_ceiling = ceiling;

  // Grid: linear head, log tail, plus phase-uniform points over the
  // oscillatory zone (the log tail alone under-resolves the last zeros for
  // alpha near 2, where the Lemma-2 ceiling is far above them).
  std::vector<double> grid;
  const double lin_hi = std::min(50.0, ceiling);
  const std::size_t np = std::max<std::size_t>(opts.grid_points, 16);
  grid.reserve(np + np / 2 + 1024);
  for (std::size_t i = 0; i <= np; ++i)
    grid.push_back(lin_hi * static_cast<double>(i) / static_cast<double>(np));
  if (ceiling > lin_hi) {
    const std::size_t nl = np / 2;
    double ratio = ceiling / lin_hi;
    for (std::size_t i = 1; i <= nl; ++i)
      grid.push_back(lin_hi * std::pow(ratio, static_cast<double>(i) / static_cast<double>(nl)));
    double s_lo = std::pow(lin_hi, 1.0 / alpha);
    double s_hi = std::min(1.25 * oscillation_end_s(alpha), std::pow(ceiling, 1.0 / alpha));
    if (s_hi > s_lo) {
      double ds = (kPi / (8.0 * std::sin(kPi / alpha))) * (4096.0 / static_cast<double>(np));
      for (double s = s_lo + ds; s < s_hi; s += ds) grid.push_back(std::pow(s, alpha));
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return b - a <= 1e-12 * std::max(b, 1e-30); }),
             grid.end());

  std::vector<double> values(grid.size());
  detail::parallel_for(grid.size(), opts.threads,
                       [&](std::size_t i) { values[i] = psi(alpha, grid[i]); });

  auto psi_here = [&](double eta) { return psi(alpha, eta); };

  std::vector<std::pair<double, double>> brackets;  // (lo, hi) with sign change
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double flo = values[i], fhi = values[i + 1];
    if (flo == 0.0) continue;  // reported via the neighbouring cell
    if ((flo < 0.0) != (fhi < 0.0)) {
      brackets.emplace_back(grid[i], grid[i + 1]);
      continue;
    }
    // near-tangency probe: a dip toward zero, relative to the local
    // oscillation amplitude, may hide a zero pair inside one cell
    double dip = std::min(std::abs(flo), std::abs(fhi));
    double amp = 0.0;
    for (std::size_t j = (i >= 8 ? i - 8 : 0); j < std::min(grid.size(), i + 9); ++j)
      amp = std::max(amp, std::abs(values[j]));
    if (grid[i] > 0.0 && dip < 1e-9 * amp) {
      bool found = false;
      double prev_eta = grid[i], prev_val = flo;
      for (int k = 1; k <= 16; ++k) {
        double eta = grid[i] + (grid[i + 1] - grid[i]) * k / 16.0;
        double val = psi_here(eta);
        if ((val < 0.0) != (prev_val < 0.0)) {
          brackets.emplace_back(prev_eta, eta);
          found = true;
        }
        prev_eta = eta;
        prev_val = val;
      }
      if (!found) {
        std::ostringstream os;
        os << "near-tangency: |psi| dips to " << dip << " in (" << grid[i] << ", "
           << grid[i + 1] << ") without a sign change; zeros there (if any) are unresolved";
        out.notes.push_back(os.str());
      }
    }
  }

  if (brackets.empty()) {
    throw bracket_error(
        "find_zeros: no sign change of psi found on [0, ceiling]; at least one zero is "
        "guaranteed, so this indicates an evaluation defect");
  }

  for (auto [lo, hi] : brackets) {
    Refined r = bisect(psi_here, lo, hi, psi_here(lo), psi_here(hi), opts.bracket_tol);
    out.zeros.push_back({r.root, r.lo, r.hi, std::abs(r.f_root)});
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const ZeroBracket& a, const ZeroBracket& b) { return a.eta < b.eta; });
  return out;
}

}  // namespace fdw
