#ifndef SPDG_SURFACE_HPP
#define SPDG_SURFACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spdg/objective.hpp"

namespace spdg {

struct GridSpec {
  double lo1 = -5.0;
  double hi1 = 5.0;
  int n1 = 81;
  double lo2 = -5.0;
  double hi2 = 5.0;
  int n2 = 81;
};

// Numeric grid of a cost surface around an anchor. Row-major z with axis1 as
// the slow index; +infinity marks cells outside the dual-feasible set.
struct SurfaceGrid {
  std::string kind;  // "primal" or "primal-dual"
  std::vector<double> axis1;
  std::vector<double> axis2;
  std::vector<double> z;
  ModelParams anchor;
  DualVars anchor_duals{Vec2{-1.0, -1.0}};  // primal-dual only
  Vec2 dir_theta{0.0, 0.0};                 // primal-dual only
  DualVars dir_duals{Vec2{0.0, 0.0}};       // primal-dual only

  double at(int i, int j) const { return z[static_cast<std::size_t>(i) * axis2.size() + j]; }
};

// z[i][j] = matching cost at (w_a0 + axis1[i], w_b0 + axis2[j]).
SurfaceGrid primal_surface(const ModelParams& theta0,
                           std::span<const InputPoint> inputs, const Prior& prior,
                           const GridSpec& grid);

// z[i][j] = lagrangian at (theta0 + axis1[i]*d_theta, v0 + axis2[j]*d_v) with
// unit-norm random directions drawn from the seed; dual-infeasible cells are
// +infinity.
SurfaceGrid primal_dual_surface(const ModelParams& theta0, const DualVars& v0,
                                std::span<const InputPoint> inputs,
                                const Prior& prior, const GridSpec& grid,
                                std::uint64_t seed);

}  // namespace spdg

#endif
