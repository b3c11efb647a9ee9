#ifndef SPDG_OBJECTIVE_HPP
#define SPDG_OBJECTIVE_HPP

#include <span>
#include <variant>

#include "spdg/model.hpp"
#include "spdg/prior.hpp"

namespace spdg {

// Dual variables: one strictly negative entry per prior entry.
using DualVars = std::variant<Vec2, Mat2>;

// Averaged classifier output statistics.
// Unigram: ((1/T) sum p_t(0), (1/T) sum p_t(1)).
Vec2 unigram_stats(const ModelParams& params, std::span<const InputPoint> inputs);

// Bigram: (1/(T-1)) sum_{t=2..T} p_{t-1} p_t^T over adjacent pairs, so the
// inputs must be contiguous in time order.
Mat2 bigram_stats(const ModelParams& params, std::span<const InputPoint> inputs);

// Prior-weighted log-matching cost -sum_k prior_k * ln(stats_k). Terms with
// prior_k = 0 are skipped; a positive prior entry meeting exactly zero stats
// yields +infinity rather than an exception.
double matching_cost(const Vec2& prior, const Vec2& stats);
double matching_cost(const Mat2& prior, const Mat2& stats);

// Elementwise -1/stats, the exact maximizer of the saddle objective in the
// dual variables for fixed model parameters.
Vec2 dual_optimum(const Vec2& stats);
Mat2 dual_optimum(const Mat2& stats);

// The saddle objective. Unigram:
//   (1/T) sum_t [p0 v0 p_t(0) + p1 v1 p_t(1)] + p0 ln(-v0) + p1 ln(-v1)
// Bigram:
//   (1/(T-1)) sum_t p_{t-1}^T (P (*) V) p_t + <P, ln(-V)>
// where (*) is the elementwise product. Maximized over V it equals
// matching_cost - 1 (the conjugate transform contributes the constant -1).
double lagrangian(const ModelParams& params, const Vec2& duals,
                  std::span<const InputPoint> inputs, const UnigramPrior& prior);
double lagrangian(const ModelParams& params, const Mat2& duals,
                  std::span<const InputPoint> inputs, const BigramPrior& prior);

// d lagrangian / d (w_a, w_b).
Vec2 lagrangian_grad_params(const ModelParams& params, const Vec2& duals,
                            std::span<const InputPoint> batch,
                            const UnigramPrior& prior);
Vec2 lagrangian_grad_params(const ModelParams& params, const Mat2& duals,
                            std::span<const InputPoint> batch,
                            const BigramPrior& prior);

// d lagrangian / d V, elementwise prior (*) stats + prior (/) V.
Vec2 lagrangian_grad_duals(const ModelParams& params, const Vec2& duals,
                           std::span<const InputPoint> batch,
                           const UnigramPrior& prior);
Mat2 lagrangian_grad_duals(const ModelParams& params, const Mat2& duals,
                           std::span<const InputPoint> batch,
                           const BigramPrior& prior);

// Prior-generic wrappers used by the trainer and surface exports.
DualVars stats_of(const Prior& prior, const ModelParams& params,
                  std::span<const InputPoint> inputs);
double matching_cost(const Prior& prior, const ModelParams& params,
                     std::span<const InputPoint> inputs);
double lagrangian(const Prior& prior, const ModelParams& params,
                  const DualVars& duals, std::span<const InputPoint> inputs);
DualVars dual_optimum_of(const Prior& prior, const ModelParams& params,
                         std::span<const InputPoint> inputs);

}  // namespace spdg

#endif
