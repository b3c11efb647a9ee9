#include "spdg/datagen.hpp"

#include <cmath>
#include <utility>

#include "spdg/rng.hpp"

namespace spdg {

std::vector<int> sample_labels_iid(const UnigramPrior& p, std::size_t count,
                                   std::uint64_t seed) {
  if (count == 0) {
    throw InvalidInputError("label count must be >= 1");
  }
  SeededRng rng(seed);
  std::vector<int> labels(count);
  for (auto& y : labels) y = rng.next_uniform() < p.p[1] ? 1 : 0;
  return labels;
}

std::vector<int> sample_labels_markov(const TransitionMatrix& trans,
                                      std::size_t count, std::uint64_t seed) {
  if (count < 2) {
    throw InvalidInputError("markov sequence needs at least 2 labels");
  }
  const Vec2 pi = steady_state(trans);
  SeededRng rng(seed);
  std::vector<int> labels(count);
  labels[0] = rng.next_uniform() < pi[1] ? 1 : 0;
  for (std::size_t t = 1; t < count; ++t) {
    const int prev = labels[t - 1];
    labels[t] = rng.next_uniform() < trans.p[prev][1] ? 1 : 0;
  }
  return labels;
}

std::vector<InputPoint> sample_emissions(std::span<const int> labels,
                                         const EmissionSpec& spec,
                                         std::uint64_t seed) {
  if (labels.empty()) {
    throw InvalidInputError("emission sampling needs labels");
  }
  if (!(spec.sigma2 > 0.0)) {
    throw InvalidInputError("sigma2 must be positive");
  }
  SeededRng rng(seed);
  const double sd = std::sqrt(spec.sigma2);
  std::vector<InputPoint> inputs(labels.size());
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const Vec2& mu = labels[t] == 0 ? spec.mu0 : spec.mu1;
    const auto [z1, z2] = rng.next_normal_pair();
    inputs[t] = {mu[0] + sd * z1, mu[1] + sd * z2};
  }
  return inputs;
}

Dataset split_dataset(std::vector<InputPoint> inputs, std::vector<int> labels,
                      const SplitSizes& sizes) {
  if (inputs.size() != labels.size()) {
    throw InvalidInputError("inputs and labels must have equal length");
  }
  if (sizes.total() != inputs.size()) {
    throw InvalidInputError("split sizes must sum to the sequence length");
  }
  return Dataset{std::move(inputs), std::move(labels), sizes};
}

}  // namespace spdg
