#ifndef SPDG_DATAGEN_HPP
#define SPDG_DATAGEN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "spdg/common.hpp"
#include "spdg/prior.hpp"

namespace spdg {

// Isotropic Gaussian emission per class: x_t ~ N(mu_{y_t}, sigma2 * I).
// Defaults are the example centers the source experiments print.
struct EmissionSpec {
  Vec2 mu0{-0.504, -0.264};
  Vec2 mu1{1.646, 0.181};
  double sigma2 = 0.4;
};

struct SplitSizes {
  std::size_t train = 50000;
  std::size_t val = 5000;
  std::size_t test = 5000;

  std::size_t total() const { return train + val + test; }
};

// Ordered sequence with contiguous train|val|test ranges. Splits are never
// shuffled: adjacency carries the label-sequence structure.
struct Dataset {
  std::vector<InputPoint> inputs;
  std::vector<int> labels;
  SplitSizes splits;

  std::span<const InputPoint> train_inputs() const {
    return {inputs.data(), splits.train};
  }
  std::span<const InputPoint> val_inputs() const {
    return {inputs.data() + splits.train, splits.val};
  }
  std::span<const InputPoint> test_inputs() const {
    return {inputs.data() + splits.train + splits.val, splits.test};
  }
  std::span<const int> train_labels() const { return {labels.data(), splits.train}; }
  std::span<const int> val_labels() const {
    return {labels.data() + splits.train, splits.val};
  }
  std::span<const int> test_labels() const {
    return {labels.data() + splits.train + splits.val, splits.test};
  }
};

// I.i.d. Bernoulli labels with P(1) = p.p[1].
std::vector<int> sample_labels_iid(const UnigramPrior& p, std::size_t count,
                                   std::uint64_t seed);

// First-order Markov labels; y_1 drawn from the steady state so the analytic
// joint pair distribution is exact for the whole sequence.
std::vector<int> sample_labels_markov(const TransitionMatrix& trans,
                                      std::size_t count, std::uint64_t seed);

std::vector<InputPoint> sample_emissions(std::span<const int> labels,
                                         const EmissionSpec& spec,
                                         std::uint64_t seed);

// Marks contiguous ranges train|val|test; sizes must cover the data exactly.
Dataset split_dataset(std::vector<InputPoint> inputs, std::vector<int> labels,
                      const SplitSizes& sizes);

}  // namespace spdg

#endif
