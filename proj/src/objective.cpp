#include "spdg/objective.hpp"

#include <cmath>
#include <limits>

namespace spdg {

namespace {

constexpr double kLogFloor = 1e-300;

void check_negative(double v) {
  if (!(v < 0.0)) {
    throw std::domain_error("dual variables must be strictly negative");
  }
}

void check_duals(const Vec2& v) {
  check_negative(v[0]);
  check_negative(v[1]);
}

void check_duals(const Mat2& v) {
  for (const auto& row : v)
    for (double e : row) check_negative(e);
}

double log_term(double prior, double stats) {
  if (prior == 0.0) return 0.0;
  if (stats == 0.0) return std::numeric_limits<double>::infinity();
  return -prior * std::log(std::max(stats, kLogFloor));
}

}  // namespace

Vec2 unigram_stats(const ModelParams& params, std::span<const InputPoint> inputs) {
  if (inputs.empty()) {
    throw InvalidInputError("unigram statistics need a non-empty sequence");
  }
  double s0 = 0.0;
  for (const auto& x : inputs) s0 += posterior(params, x).p0;
  s0 /= static_cast<double>(inputs.size());
  return {s0, 1.0 - s0};
}

Mat2 bigram_stats(const ModelParams& params, std::span<const InputPoint> inputs) {
  if (inputs.size() < 2) {
    throw InvalidInputError("bigram statistics need at least 2 points");
  }
  Mat2 s{{{0.0, 0.0}, {0.0, 0.0}}};
  PosteriorPair prev = posterior(params, inputs[0]);
  for (std::size_t t = 1; t < inputs.size(); ++t) {
    const PosteriorPair cur = posterior(params, inputs[t]);
    s[0][0] += prev.p0 * cur.p0;
    s[0][1] += prev.p0 * cur.p1;
    s[1][0] += prev.p1 * cur.p0;
    s[1][1] += prev.p1 * cur.p1;
    prev = cur;
  }
  const double pairs = static_cast<double>(inputs.size() - 1);
  for (auto& row : s)
    for (auto& e : row) e /= pairs;
  return s;
}

double matching_cost(const Vec2& prior, const Vec2& stats) {
  return log_term(prior[0], stats[0]) + log_term(prior[1], stats[1]);
}

double matching_cost(const Mat2& prior, const Mat2& stats) {
  double cost = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) cost += log_term(prior[i][j], stats[i][j]);
  return cost;
}

Vec2 dual_optimum(const Vec2& stats) {
  if (stats[0] <= 0.0 || stats[1] <= 0.0) {
    throw std::domain_error("dual optimum needs strictly positive statistics");
  }
  return {-1.0 / stats[0], -1.0 / stats[1]};
}

Mat2 dual_optimum(const Mat2& stats) {
  Mat2 v;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (stats[i][j] <= 0.0) {
        throw std::domain_error("dual optimum needs strictly positive statistics");
      }
      v[i][j] = -1.0 / stats[i][j];
    }
  return v;
}

double lagrangian(const ModelParams& params, const Vec2& duals,
                  std::span<const InputPoint> inputs, const UnigramPrior& prior) {
  check_duals(duals);
  const Vec2 s = unigram_stats(params, inputs);
  return prior.p[0] * duals[0] * s[0] + prior.p[1] * duals[1] * s[1] +
         prior.p[0] * std::log(-duals[0]) + prior.p[1] * std::log(-duals[1]);
}

double lagrangian(const ModelParams& params, const Mat2& duals,
                  std::span<const InputPoint> inputs, const BigramPrior& prior) {
  check_duals(duals);
  const Mat2 s = bigram_stats(params, inputs);
  double value = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      value += prior.p[i][j] * duals[i][j] * s[i][j];
      value += prior.p[i][j] * std::log(-duals[i][j]);
    }
  return value;
}

Vec2 lagrangian_grad_params(const ModelParams& params, const Vec2& duals,
                            std::span<const InputPoint> batch,
                            const UnigramPrior& prior) {
  check_duals(duals);
  if (batch.empty()) {
    throw InvalidInputError("gradient needs a non-empty batch");
  }
  // (1/T) sum_t gamma p_t(0) p_t(1) [P (*) V] X_t with X_t from the posterior
  // Jacobian; the row collapses to (c*x_a, -c*x_b), c = p0 v0 - p1 v1.
  const double c = prior.p[0] * duals[0] - prior.p[1] * duals[1];
  double ga = 0.0;
  double gb = 0.0;
  for (const auto& x : batch) {
    const PosteriorPair p = posterior(params, x);
    const double k = params.gamma * p.p0 * p.p1 * c;
    ga += k * x.x_a;
    gb -= k * x.x_b;
  }
  const double t = static_cast<double>(batch.size());
  return {ga / t, gb / t};
}

Vec2 lagrangian_grad_params(const ModelParams& params, const Mat2& duals,
                            std::span<const InputPoint> batch,
                            const BigramPrior& prior) {
  check_duals(duals);
  if (batch.size() < 2) {
    throw InvalidInputError("bigram gradient needs at least 2 points");
  }
  Mat2 m;  // P (*) V
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = prior.p[i][j] * duals[i][j];

  // Chain rule on (1/(T-1)) sum_t p_{t-1}^T M p_t:
  //   sum_t [ p_t^T M^T J_{t-1} + p_{t-1}^T M J_t ]
  // with J_t = gamma p_t(0) p_t(1) [[x_a,-x_b],[-x_a,x_b]]. Each Jacobian
  // carries its own time index's scalar factor.
  double ga = 0.0;
  double gb = 0.0;
  PosteriorPair prev = posterior(params, batch[0]);
  for (std::size_t t = 1; t < batch.size(); ++t) {
    const PosteriorPair cur = posterior(params, batch[t]);
    const double k_prev = params.gamma * prev.p0 * prev.p1;
    const double k_cur = params.gamma * cur.p0 * cur.p1;
    // d = M p_t, e = M^T p_{t-1}
    const double d0 = m[0][0] * cur.p0 + m[0][1] * cur.p1;
    const double d1 = m[1][0] * cur.p0 + m[1][1] * cur.p1;
    const double e0 = m[0][0] * prev.p0 + m[1][0] * prev.p1;
    const double e1 = m[0][1] * prev.p0 + m[1][1] * prev.p1;
    ga += k_prev * (d0 - d1) * batch[t - 1].x_a + k_cur * (e0 - e1) * batch[t].x_a;
    gb += k_prev * (d1 - d0) * batch[t - 1].x_b + k_cur * (e1 - e0) * batch[t].x_b;
    prev = cur;
  }
  const double pairs = static_cast<double>(batch.size() - 1);
  return {ga / pairs, gb / pairs};
}

Vec2 lagrangian_grad_duals(const ModelParams& params, const Vec2& duals,
                           std::span<const InputPoint> batch,
                           const UnigramPrior& prior) {
  check_duals(duals);
  const Vec2 s = unigram_stats(params, batch);
  return {prior.p[0] * s[0] + prior.p[0] / duals[0],
          prior.p[1] * s[1] + prior.p[1] / duals[1]};
}

Mat2 lagrangian_grad_duals(const ModelParams& params, const Mat2& duals,
                           std::span<const InputPoint> batch,
                           const BigramPrior& prior) {
  check_duals(duals);
  const Mat2 s = bigram_stats(params, batch);
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      g[i][j] = prior.p[i][j] * s[i][j] + prior.p[i][j] / duals[i][j];
    }
  return g;
}

DualVars stats_of(const Prior& prior, const ModelParams& params,
                  std::span<const InputPoint> inputs) {
  if (std::holds_alternative<UnigramPrior>(prior)) {
    return unigram_stats(params, inputs);
  }
  return bigram_stats(params, inputs);
}

double matching_cost(const Prior& prior, const ModelParams& params,
                     std::span<const InputPoint> inputs) {
  if (const auto* u = std::get_if<UnigramPrior>(&prior)) {
    return matching_cost(u->p, unigram_stats(params, inputs));
  }
  return matching_cost(std::get<BigramPrior>(prior).p, bigram_stats(params, inputs));
}

double lagrangian(const Prior& prior, const ModelParams& params,
                  const DualVars& duals, std::span<const InputPoint> inputs) {
  if (const auto* u = std::get_if<UnigramPrior>(&prior)) {
    return lagrangian(params, std::get<Vec2>(duals), inputs, *u);
  }
  return lagrangian(params, std::get<Mat2>(duals), inputs, std::get<BigramPrior>(prior));
}

DualVars dual_optimum_of(const Prior& prior, const ModelParams& params,
                         std::span<const InputPoint> inputs) {
  if (std::holds_alternative<UnigramPrior>(prior)) {
    return dual_optimum(unigram_stats(params, inputs));
  }
  return dual_optimum(bigram_stats(params, inputs));
}

}  // namespace spdg
