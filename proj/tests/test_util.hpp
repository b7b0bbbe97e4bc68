#pragma once

#include <cmath>
#include <cstdint>

namespace test_util {

// Deterministic uniform doubles; stdlib distributions are
// implementation-defined and would tie expected values to one libstdc++.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0,1)
  double symmetric() { return 2.0 * unit() - 1.0; }                        // [-1,1)
  double in(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

inline double rel_err(double got, double want) {
  double denom = std::abs(want);
  return denom > 0 ? std::abs(got - want) / denom : std::abs(got);
}

// |got - want| <= tol * max(1, |want|)
inline bool close_hybrid(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::fmax(1.0, std::abs(want));
}

}  // namespace test_util
