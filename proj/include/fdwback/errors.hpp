#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdw {

/// Gamma evaluated at a non-positive integer.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// No evaluation regime can certify the requested tolerance.
class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature tail criterion unmet at the ray-truncation cap.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Sign scan found no crossing where one is guaranteed to exist;
/// signals an evaluation bug rather than a property of the problem.
class bracket_error : public std::runtime_error {
 public:
  explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

/// Null-mode construction produced a numerically zero datum.
class degenerate_mode_error : public std::runtime_error {
 public:
  explicit degenerate_mode_error(const std::string& what) : std::runtime_error(what) {}
};

/// Backward reconstruction refused: some mode determinant fell below the
/// configured floor.  Mode indices are 1-based.
class ill_posed_error : public std::runtime_error {
 public:
  ill_posed_error(const std::string& what, std::vector<std::size_t> modes,
                  double min_abs_psi, double floor)
      : std::runtime_error(what),
        modes_(std::move(modes)),
        min_abs_psi_(min_abs_psi),
        floor_(floor) {}

  const std::vector<std::size_t>& modes() const { return modes_; }
  double min_abs_psi() const { return min_abs_psi_; }
  double floor() const { return floor_; }

 private:
  std::vector<std::size_t> modes_;
  double min_abs_psi_ = 0.0;
  double floor_ = 0.0;
};

}  // namespace fdw
