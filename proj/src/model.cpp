#include "spdg/model.hpp"

#include <algorithm>
#include <cmath>

namespace spdg {

namespace {

void check_inputs(const ModelParams& params, const InputPoint& x) {
  if (!finite(params.w_a) || !finite(params.w_b) || !finite(params.gamma)) {
    throw InvalidInputError("model parameters must be finite");
  }
  if (!(params.gamma > 0.0)) {
    throw InvalidInputError("gamma must be positive");
  }
  if (!finite(x.x_a) || !finite(x.x_b)) {
    throw InvalidInputError("input point must be finite");
  }
}

}  // namespace

PosteriorPair posterior(const ModelParams& params, const InputPoint& x) {
  check_inputs(params, x);
  const double z0 = params.gamma * params.w_a * x.x_a;
  const double z1 = params.gamma * params.w_b * x.x_b;
  const double m = std::max(z0, z1);
  const double e0 = std::exp(z0 - m);
  const double e1 = std::exp(z1 - m);
  const double sum = e0 + e1;
  return {e0 / sum, e1 / sum};
}

int predict(const ModelParams& params, const InputPoint& x) {
  check_inputs(params, x);
  // p(0) >= 0.5 iff the class-0 logit is at least the class-1 logit.
  return params.w_a * x.x_a >= params.w_b * x.x_b ? 0 : 1;
}

Mat2 posterior_jacobian(const ModelParams& params, const InputPoint& x) {
  const PosteriorPair p = posterior(params, x);
  const double k = params.gamma * p.p0 * p.p1;
  return {{{k * x.x_a, -k * x.x_b}, {-k * x.x_a, k * x.x_b}}};
}

}  // namespace spdg
