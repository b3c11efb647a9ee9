#ifndef SPDG_COMMON_HPP
#define SPDG_COMMON_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spdg {

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// One observation x_t = (x^a, x^b).
struct InputPoint {
  double x_a = 0.0;
  double x_b = 0.0;
};

struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reducible or periodic chain: stationary distribution missing or not reachable.
struct NoSteadyStateError : std::domain_error {
  using std::domain_error::domain_error;
};

inline bool finite(double v) { return std::isfinite(v); }

inline double mat2_total(const Mat2& m) {
  return m[0][0] + m[0][1] + m[1][0] + m[1][1];
}

}  // namespace spdg

#endif
