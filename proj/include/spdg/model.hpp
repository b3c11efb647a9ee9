#ifndef SPDG_MODEL_HPP
#define SPDG_MODEL_HPP

#include "spdg/common.hpp"

namespace spdg {

// Log-linear binary classifier with one weight per input coordinate and a
// fixed scale gamma. Gamma is never touched by any optimizer step.
struct ModelParams {
  double w_a = 0.0;
  double w_b = 0.0;
  double gamma = 10.0;
};

struct PosteriorPair {
  double p0 = 0.5;
  double p1 = 0.5;
};

// Softmax over the logits (gamma*w_a*x_a, gamma*w_b*x_b), computed with
// max-subtraction so large gamma*w*x cannot overflow.
PosteriorPair posterior(const ModelParams& params, const InputPoint& x);

// 0 iff p(0) >= 0.5, else 1. Ties go to class 0.
int predict(const ModelParams& params, const InputPoint& x);

// d p(i) / d w_k, rows indexed by class, columns by (w_a, w_b):
//   gamma * p0 * p1 * [[ x_a, -x_b],
//                      [-x_a,  x_b]]
Mat2 posterior_jacobian(const ModelParams& params, const InputPoint& x);

}  // namespace spdg

#endif
