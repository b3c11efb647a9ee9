#include "spdg/surface.hpp"

#include <cmath>
#include <limits>

#include "spdg/rng.hpp"

namespace spdg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> make_axis(double lo, double hi, int n) {
  if (n < 1 || !(hi >= lo)) {
    throw InvalidInputError("grid axis must have n >= 1 and hi >= lo");
  }
  std::vector<double> axis(static_cast<std::size_t>(n));
  if (n == 1) {
    axis[0] = lo;
    return axis;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) axis[static_cast<std::size_t>(i)] = lo + step * i;
  return axis;
}

double lagrangian_from_stats(const Vec2& prior, const Vec2& stats, const Vec2& v) {
  double value = 0.0;
  for (int k = 0; k < 2; ++k) {
    if (!(v[k] < 0.0)) return kInf;
    value += prior[k] * v[k] * stats[k] + prior[k] * std::log(-v[k]);
  }
  return value;
}

double lagrangian_from_stats(const Mat2& prior, const Mat2& stats, const Mat2& v) {
  double value = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (!(v[i][j] < 0.0)) return kInf;
      value += prior[i][j] * v[i][j] * stats[i][j] +
               prior[i][j] * std::log(-v[i][j]);
    }
  return value;
}

}  // namespace

SurfaceGrid primal_surface(const ModelParams& theta0,
                           std::span<const InputPoint> inputs, const Prior& prior,
                           const GridSpec& grid) {
  SurfaceGrid out;
  out.kind = "primal";
  out.anchor = theta0;
  out.axis1 = make_axis(grid.lo1, grid.hi1, grid.n1);
  out.axis2 = make_axis(grid.lo2, grid.hi2, grid.n2);
  out.z.reserve(out.axis1.size() * out.axis2.size());
  for (double l1 : out.axis1) {
    for (double l2 : out.axis2) {
      ModelParams theta = theta0;
      theta.w_a += l1;
      theta.w_b += l2;
      out.z.push_back(matching_cost(prior, theta, inputs));
    }
  }
  return out;
}

SurfaceGrid primal_dual_surface(const ModelParams& theta0, const DualVars& v0,
                                std::span<const InputPoint> inputs,
                                const Prior& prior, const GridSpec& grid,
                                std::uint64_t seed) {
  const bool bigram = std::holds_alternative<BigramPrior>(prior);
  if (bigram != std::holds_alternative<Mat2>(v0)) {
    throw InvalidInputError("dual shape does not match the prior mode");
  }

  SurfaceGrid out;
  out.kind = "primal-dual";
  out.anchor = theta0;
  out.anchor_duals = v0;
  out.axis1 = make_axis(grid.lo1, grid.hi1, grid.n1);
  out.axis2 = make_axis(grid.lo2, grid.hi2, grid.n2);

  SeededRng rng(seed);
  // Random endpoint theta1 defines the primal direction (theta1 - theta0),
  // normalized so lambda ranges mean the same thing across seeds.
  Vec2 d_theta{};
  double norm = 0.0;
  while (norm < 1e-12) {
    d_theta = {rng.next_uniform(-1.0, 1.0) - theta0.w_a,
               rng.next_uniform(-1.0, 1.0) - theta0.w_b};
    norm = std::sqrt(d_theta[0] * d_theta[0] + d_theta[1] * d_theta[1]);
  }
  d_theta = {d_theta[0] / norm, d_theta[1] / norm};
  out.dir_theta = d_theta;

  const auto draw_dual_dir = [&rng](const auto& anchor) {
    auto dir = anchor;
    double n2 = 0.0;
    if constexpr (std::is_same_v<std::decay_t<decltype(anchor)>, Vec2>) {
      while (n2 < 1e-24) {
        n2 = 0.0;
        for (int k = 0; k < 2; ++k) {
          dir[k] = rng.next_uniform(-1.0, 1.0) - anchor[k];
          n2 += dir[k] * dir[k];
        }
      }
      const double n = std::sqrt(n2);
      for (auto& e : dir) e /= n;
    } else {
      while (n2 < 1e-24) {
        n2 = 0.0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            dir[i][j] = rng.next_uniform(-1.0, 1.0) - anchor[i][j];
            n2 += dir[i][j] * dir[i][j];
          }
      }
      const double n = std::sqrt(n2);
      for (auto& row : dir)
        for (auto& e : row) e /= n;
    }
    return dir;
  };

  out.z.assign(out.axis1.size() * out.axis2.size(), kInf);
  if (!bigram) {
    const auto& uprior = std::get<UnigramPrior>(prior);
    const Vec2 anchor_v = std::get<Vec2>(v0);
    const Vec2 d_v = draw_dual_dir(anchor_v);
    out.dir_duals = d_v;
    std::size_t cell = 0;
    for (double l1 : out.axis1) {
      ModelParams theta = theta0;
      theta.w_a += l1 * d_theta[0];
      theta.w_b += l1 * d_theta[1];
      const Vec2 stats = unigram_stats(theta, inputs);
      for (double l2 : out.axis2) {
        const Vec2 v{anchor_v[0] + l2 * d_v[0], anchor_v[1] + l2 * d_v[1]};
        out.z[cell++] = lagrangian_from_stats(uprior.p, stats, v);
      }
    }
  } else {
    const auto& bprior = std::get<BigramPrior>(prior);
    const Mat2 anchor_v = std::get<Mat2>(v0);
    const Mat2 d_v = draw_dual_dir(anchor_v);
    out.dir_duals = d_v;
    std::size_t cell = 0;
    for (double l1 : out.axis1) {
      ModelParams theta = theta0;
      theta.w_a += l1 * d_theta[0];
      theta.w_b += l1 * d_theta[1];
      const Mat2 stats = bigram_stats(theta, inputs);
      for (double l2 : out.axis2) {
        Mat2 v = anchor_v;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) v[i][j] += l2 * d_v[i][j];
        out.z[cell++] = lagrangian_from_stats(bprior.p, stats, v);
      }
    }
  }
  return out;
}

}  // namespace spdg
