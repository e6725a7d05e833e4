#pragma once

#include <stdexcept>
#include <string>

namespace polarfade {

/// Thrown when an iterative numerical routine (quadrature, root bracketing)
/// exhausts its budget before reaching the requested tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an optimization problem has no feasible point.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polarfade
