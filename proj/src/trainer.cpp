#include "spdg/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spdg/rng.hpp"

namespace spdg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_hyper(const Hyperparams& hyper, bool bigram) {
  if (!(hyper.lr_theta >= 0.0) || !(hyper.lr_dual >= 0.0)) {
    throw InvalidInputError("learning rates must be nonnegative");
  }
  if (hyper.batch_len < (bigram ? 2 : 1)) {
    throw InvalidInputError("batch_len too small for the prior mode");
  }
  if (hyper.max_steps < 0 || hyper.eval_every <= 0 || hyper.patience < 0) {
    throw InvalidInputError("bad step/eval/patience configuration");
  }
  if (!(hyper.dual_clamp_eps > 0.0) || !(hyper.gamma > 0.0)) {
    throw InvalidInputError("dual_clamp_eps and gamma must be positive");
  }
}

// Fast posterior for the inner loop; identical math to posterior() but
// skips per-call validation (inputs are validated once up front).
inline double posterior0(const ModelParams& params, const InputPoint& x) {
  const double z = params.gamma * (params.w_a * x.x_a - params.w_b * x.x_b);
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_points(std::span<const InputPoint> pts, const char* what) {
  if (pts.empty()) {
    throw InvalidInputError(std::string(what) + " inputs must be non-empty");
  }
  for (const auto& p : pts) {
    if (!finite(p.x_a) || !finite(p.x_b)) {
      throw InvalidInputError(std::string(what) + " inputs must be finite");
    }
  }
}

struct UnigramMode {
  using Duals = Vec2;
  UnigramPrior prior;

  static Duals init_duals(SeededRng& rng) {
    return {-1.0 - rng.next_uniform(), -1.0 - rng.next_uniform()};
  }
  static void clamp(Duals& v, double eps) {
    v[0] = std::min(v[0], -eps);
    v[1] = std::min(v[1], -eps);
  }
  double cost(const ModelParams& params, std::span<const InputPoint> inputs) const {
    return matching_cost(prior.p, unigram_stats(params, inputs));
  }
  // One SPDG step on a window; posteriors are evaluated once per point.
  void step(ModelParams& params, Duals& v, std::span<const InputPoint> w,
            double lr_theta, double lr_dual) const {
    const double c = prior.p[0] * v[0] - prior.p[1] * v[1];
    double ga = 0.0, gb = 0.0, s0 = 0.0;
    for (const auto& x : w) {
      const double p0 = posterior0(params, x);
      const double k = params.gamma * p0 * (1.0 - p0) * c;
      ga += k * x.x_a;
      gb -= k * x.x_b;
      s0 += p0;
    }
    const double n = static_cast<double>(w.size());
    ga /= n;
    gb /= n;
    s0 /= n;
    params.w_a -= lr_theta * ga;
    params.w_b -= lr_theta * gb;
    v[0] += lr_dual * (prior.p[0] * s0 + prior.p[0] / v[0]);
    v[1] += lr_dual * (prior.p[1] * (1.0 - s0) + prior.p[1] / v[1]);
  }
};

struct BigramMode {
  using Duals = Mat2;
  BigramPrior prior;

  static Duals init_duals(SeededRng& rng) {
    Duals v;
    for (auto& row : v)
      for (auto& e : row) e = -1.0 - rng.next_uniform();
    return v;
  }
  static void clamp(Duals& v, double eps) {
    for (auto& row : v)
      for (auto& e : row) e = std::min(e, -eps);
  }
  double cost(const ModelParams& params, std::span<const InputPoint> inputs) const {
    return matching_cost(prior.p, bigram_stats(params, inputs));
  }
  void step(ModelParams& params, Duals& v, std::span<const InputPoint> w,
            double lr_theta, double lr_dual) const {
    Mat2 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[i][j] = prior.p[i][j] * v[i][j];
    double ga = 0.0, gb = 0.0;
    Mat2 s{{{0.0, 0.0}, {0.0, 0.0}}};
    double prev = posterior0(params, w[0]);
    for (std::size_t t = 1; t < w.size(); ++t) {
      const double cur = posterior0(params, w[t]);
      const double a0 = prev, a1 = 1.0 - prev;
      const double b0 = cur, b1 = 1.0 - cur;
      const double k_prev = params.gamma * a0 * a1;
      const double k_cur = params.gamma * b0 * b1;
      const double d0 = m[0][0] * b0 + m[0][1] * b1;
      const double d1 = m[1][0] * b0 + m[1][1] * b1;
      const double e0 = m[0][0] * a0 + m[1][0] * a1;
      const double e1 = m[0][1] * a0 + m[1][1] * a1;
      ga += k_prev * (d0 - d1) * w[t - 1].x_a + k_cur * (e0 - e1) * w[t].x_a;
      gb += k_prev * (d1 - d0) * w[t - 1].x_b + k_cur * (e1 - e0) * w[t].x_b;
      s[0][0] += a0 * b0;
      s[0][1] += a0 * b1;
      s[1][0] += a1 * b0;
      s[1][1] += a1 * b1;
      prev = cur;
    }
    const double pairs = static_cast<double>(w.size() - 1);
    params.w_a -= lr_theta * ga / pairs;
    params.w_b -= lr_theta * gb / pairs;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        v[i][j] += lr_dual * (prior.p[i][j] * s[i][j] / pairs + prior.p[i][j] / v[i][j]);
      }
  }
};

template <class Mode>
struct SingleRun {
  ModelParams params;
  typename Mode::Duals duals;
  TrainTrace trace;
  double best_val = kInf;
};

template <class Mode>
SingleRun<Mode> run_spdg(const Mode& mode, std::span<const InputPoint> train,
                         std::span<const InputPoint> val, const Hyperparams& hyper,
                         std::uint64_t seed, double init_scale,
                         std::span<const int> val_labels) {
  SeededRng rng(seed);
  ModelParams theta{rng.next_uniform(-init_scale, init_scale),
                    rng.next_uniform(-init_scale, init_scale), hyper.gamma};
  auto duals = Mode::init_duals(rng);

  SingleRun<Mode> run;
  run.params = theta;
  run.duals = duals;

  ModelParams best_theta = theta;
  auto best_duals = duals;
  double best_val = kInf;
  int bad_evals = 0;

  const std::size_t window = static_cast<std::size_t>(hyper.batch_len);
  const std::size_t starts = train.size() - window + 1;

  for (long long step = 1; step <= hyper.max_steps; ++step) {
    const std::size_t s = rng.next_index(starts);
    mode.step(theta, duals, train.subspan(s, window), hyper.lr_theta, hyper.lr_dual);
    Mode::clamp(duals, hyper.dual_clamp_eps);

    if (step % hyper.eval_every == 0) {
      double j_val = mode.cost(theta, val);
      ModelParams candidate = theta;
      if (hyper.mirror_select) {
        ModelParams mirrored = theta;
        mirrored.w_a = -theta.w_a;
        mirrored.w_b = -theta.w_b;
        const double j_mirror = mode.cost(mirrored, val);
        if (j_mirror < j_val) {
          j_val = j_mirror;
          candidate = mirrored;
        }
      }
      TraceRow row;
      row.step = step;
      row.j_train = mode.cost(candidate, train);
      row.j_val = j_val;
      if (!val_labels.empty()) {
        row.error = evaluate_error(candidate, val, val_labels).error_rate;
      }
      row.w_a = candidate.w_a;
      row.w_b = candidate.w_b;
      run.trace.push_back(row);

      if (j_val < best_val) {
        best_val = j_val;
        best_theta = candidate;
        best_duals = duals;
        bad_evals = 0;
      } else {
        ++bad_evals;
        if (bad_evals >= hyper.patience) break;
      }
    }
  }

  if (best_val < kInf) {
    run.params = best_theta;
    run.duals = best_duals;
    run.best_val = best_val;
  } else {
    // No evaluation happened (tiny step budget): report the final state.
    run.params = theta;
    run.duals = duals;
    run.best_val = mode.cost(theta, val);
  }
  return run;
}

template <class Mode>
SpdgResult train_with_restarts(const Mode& mode, std::span<const InputPoint> train,
                               std::span<const InputPoint> val,
                               const Hyperparams& hyper,
                               std::span<const int> val_labels) {
  std::vector<double> scales = hyper.restart_scales;
  if (scales.empty()) scales.push_back(hyper.init_scale);

  SingleRun<Mode> best;
  bool have = false;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    if (!(scales[k] >= 0.0)) {
      throw InvalidInputError("init scales must be nonnegative");
    }
    const std::uint64_t run_seed =
        scales.size() == 1 ? hyper.seed : derive_seed(hyper.seed, k);
    auto run = run_spdg(mode, train, val, hyper, run_seed, scales[k], val_labels);
    if (!have || run.best_val < best.best_val) {
      best = std::move(run);
      have = true;
    }
  }
  return SpdgResult{best.params, DualVars{best.duals}, std::move(best.trace),
                    best.best_val};
}

}  // namespace

SpdgResult spdg_train(std::span<const InputPoint> train,
                      std::span<const InputPoint> val, const Prior& prior,
                      const Hyperparams& hyper, std::span<const int> val_labels) {
  const bool bigram = std::holds_alternative<BigramPrior>(prior);
  check_hyper(hyper, bigram);
  check_points(train, "training");
  check_points(val, "validation");
  if (train.size() < static_cast<std::size_t>(hyper.batch_len)) {
    throw InvalidInputError("training sequence shorter than batch_len");
  }
  if (!val_labels.empty() && val_labels.size() != val.size()) {
    throw InvalidInputError("validation labels length mismatch");
  }
  if (bigram) {
    return train_with_restarts(BigramMode{std::get<BigramPrior>(prior)}, train,
                               val, hyper, val_labels);
  }
  return train_with_restarts(UnigramMode{std::get<UnigramPrior>(prior)}, train,
                             val, hyper, val_labels);
}

ModelParams supervised_train(std::span<const InputPoint> train_inputs,
                             std::span<const int> train_labels,
                             std::span<const InputPoint> val_inputs,
                             std::span<const int> val_labels,
                             const Hyperparams& hyper) {
  check_hyper(hyper, false);
  check_points(train_inputs, "training");
  check_points(val_inputs, "validation");
  if (train_inputs.size() != train_labels.size() ||
      val_inputs.size() != val_labels.size()) {
    throw InvalidInputError("inputs and labels must have equal length");
  }
  if (train_inputs.size() < static_cast<std::size_t>(hyper.batch_len)) {
    throw InvalidInputError("training sequence shorter than batch_len");
  }

  const auto mean_log_posterior = [&](const ModelParams& m) {
    double ll = 0.0;
    for (std::size_t t = 0; t < val_inputs.size(); ++t) {
      const double p0 = posterior0(m, val_inputs[t]);
      const double p = val_labels[t] == 0 ? p0 : 1.0 - p0;
      ll += std::log(std::max(p, 1e-300));
    }
    return ll / static_cast<double>(val_inputs.size());
  };

  SeededRng rng(hyper.seed);
  ModelParams theta{rng.next_uniform(-hyper.init_scale, hyper.init_scale),
                    rng.next_uniform(-hyper.init_scale, hyper.init_scale),
                    hyper.gamma};
  ModelParams best_theta = theta;
  double best_ll = -kInf;
  int bad_evals = 0;

  const std::size_t window = static_cast<std::size_t>(hyper.batch_len);
  const std::size_t starts = train_inputs.size() - window + 1;

  for (long long step = 1; step <= hyper.max_steps; ++step) {
    const std::size_t s = rng.next_index(starts);
    double ga = 0.0, gb = 0.0;
    for (std::size_t t = s; t < s + window; ++t) {
      const InputPoint& x = train_inputs[t];
      const double p0 = posterior0(theta, x);
      // d ln p(y_t)/d w = gamma * (1{y=0} - p0) * (x_a, -x_b)
      const double r = theta.gamma * ((train_labels[t] == 0 ? 1.0 : 0.0) - p0);
      ga += r * x.x_a;
      gb -= r * x.x_b;
    }
    const double n = static_cast<double>(window);
    theta.w_a += hyper.lr_theta * ga / n;
    theta.w_b += hyper.lr_theta * gb / n;

    if (step % hyper.eval_every == 0) {
      const double ll = mean_log_posterior(theta);
      if (ll > best_ll) {
        best_ll = ll;
        best_theta = theta;
        bad_evals = 0;
      } else {
        ++bad_evals;
        if (bad_evals >= hyper.patience) break;
      }
    }
  }
  return best_ll > -kInf ? best_theta : theta;
}

ErrorReport evaluate_error(const ModelParams& params,
                           std::span<const InputPoint> inputs,
                           std::span<const int> labels) {
  if (inputs.empty()) {
    throw InvalidInputError("error evaluation needs inputs");
  }
  if (inputs.size() != labels.size()) {
    throw InvalidInputError("inputs and labels must have equal length");
  }
  std::size_t wrong = 0;
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    wrong += predict(params, inputs[t]) != labels[t] ? 1 : 0;
  }
  const double err = static_cast<double>(wrong) / static_cast<double>(inputs.size());
  return {err, 1.0 - err < err};
}

}  // namespace spdg
