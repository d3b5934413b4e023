#pragma once

#include <stdexcept>
#include <string>

namespace flockmin {

/// Thrown when a kernel or potential integral genuinely diverges
/// (e.g. coincident radii with a strong negative power).
struct divergent_integral : std::runtime_error {
  explicit divergent_integral(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a quadrature cannot reach the requested tolerance.
/// The achieved error estimate is carried for diagnostics.
struct quadrature_failure : std::runtime_error {
  quadrature_failure(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

/// Thrown when two grid-bound objects do not share the same grid.
struct grid_mismatch : std::invalid_argument {
  explicit grid_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace flockmin
