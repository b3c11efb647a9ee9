#ifndef SPDG_TRAINER_HPP
#define SPDG_TRAINER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "spdg/objective.hpp"

namespace spdg {

struct Hyperparams {
  double lr_theta = 1e-6;
  double lr_dual = 1e-4;
  int batch_len = 10;
  long long max_steps = 2'000'000;
  long long eval_every = 10'000;
  int patience = 20;
  double dual_clamp_eps = 1e-6;
  std::uint64_t seed = 1;

  double gamma = 10.0;
  // Weights start i.i.d. uniform on [-init_scale, init_scale].
  double init_scale = 0.1;
  // Optional multistart: one full run per listed init scale (seeds derived
  // from `seed`), keeping the run with the lowest validation cost. Empty
  // means a single run at init_scale.
  std::vector<double> restart_scales{};
  // Also consider the mirrored candidate -theta at evaluation time. Negating
  // theta swaps the two classes exactly, so this selects the orientation the
  // label-free validation cost prefers.
  bool mirror_select = false;
};

struct TraceRow {
  long long step = 0;
  double j_train = 0.0;
  double j_val = 0.0;
  double error = std::numeric_limits<double>::quiet_NaN();
  double w_a = 0.0;
  double w_b = 0.0;
};

using TrainTrace = std::vector<TraceRow>;

struct SpdgResult {
  ModelParams params;
  DualVars duals;
  TrainTrace trace;
  double best_val_cost = 0.0;
};

// Algorithm: initialize theta ~ U[-s, s]^2 and V = -1 - U[0,1) per entry;
// each step samples one contiguous window of batch_len points from the
// training sequence, descends theta and ascends V with the analytic
// gradients, then clamps every dual entry to <= -dual_clamp_eps. Every
// eval_every steps the label-free matching cost on the validation inputs is
// evaluated for early stopping (patience = allowed consecutive evaluations
// without improvement); the parameters with the best validation cost are
// returned. val_labels, when provided, only feed the trace's error column.
SpdgResult spdg_train(std::span<const InputPoint> train,
                      std::span<const InputPoint> val, const Prior& prior,
                      const Hyperparams& hyper,
                      std::span<const int> val_labels = {});

// Maximum-posterior baseline: mini-batch gradient ascent on the mean
// log-posterior of the true labels, early-stopped on the validation
// log-posterior. Returns the best-validation parameters.
ModelParams supervised_train(std::span<const InputPoint> train_inputs,
                             std::span<const int> train_labels,
                             std::span<const InputPoint> val_inputs,
                             std::span<const int> val_labels,
                             const Hyperparams& hyper);

struct ErrorReport {
  double error_rate = 0.0;
  // True iff swapping the two labels would score better. Reported for
  // diagnostics; the raw error is never swap-corrected.
  bool swap_flag = false;
};

ErrorReport evaluate_error(const ModelParams& params,
                           std::span<const InputPoint> inputs,
                           std::span<const int> labels);

}  // namespace spdg

#endif
