#include "spdg/prior.hpp"

#include <cmath>

namespace spdg {

namespace {

constexpr double kRenormTol = 1e-9;

void check_label(int y) {
  if (y != 0 && y != 1) {
    throw InvalidInputError("labels must be 0 or 1");
  }
}

double checked_norm(double sum, const char* what) {
  if (std::abs(sum - 1.0) > kRenormTol) {
    throw InvalidInputError(std::string(what) + " must sum to 1");
  }
  return sum;
}

void check_nonneg(double v, const char* what) {
  if (!finite(v) || v < 0.0) {
    throw InvalidInputError(std::string(what) + " entries must be finite and >= 0");
  }
}

}  // namespace

UnigramPrior make_unigram(const Vec2& p) {
  check_nonneg(p[0], "unigram prior");
  check_nonneg(p[1], "unigram prior");
  const double sum = checked_norm(p[0] + p[1], "unigram prior");
  return UnigramPrior{{p[0] / sum, p[1] / sum}};
}

TransitionMatrix make_transition(const Mat2& p) {
  TransitionMatrix out;
  for (int i = 0; i < 2; ++i) {
    check_nonneg(p[i][0], "transition matrix");
    check_nonneg(p[i][1], "transition matrix");
    const double sum = checked_norm(p[i][0] + p[i][1], "transition matrix rows");
    out.p[i] = {p[i][0] / sum, p[i][1] / sum};
  }
  return out;
}

BigramPrior make_bigram(const Mat2& p) {
  for (const auto& row : p) {
    check_nonneg(row[0], "bigram prior");
    check_nonneg(row[1], "bigram prior");
  }
  const double sum = checked_norm(mat2_total(p), "bigram prior");
  BigramPrior out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.p[i][j] = p[i][j] / sum;
  return out;
}

UnigramPrior unigram_from_labels(std::span<const int> labels) {
  if (labels.empty()) {
    throw InvalidInputError("label sequence must be non-empty");
  }
  std::size_t ones = 0;
  for (int y : labels) {
    check_label(y);
    ones += static_cast<std::size_t>(y);
  }
  const double t = static_cast<double>(labels.size());
  const double p1 = static_cast<double>(ones) / t;
  return UnigramPrior{{1.0 - p1, p1}};
}

Vec2 steady_state(const TransitionMatrix& trans) {
  const double p01 = trans.p[0][1];
  const double p10 = trans.p[1][0];
  if (p01 + p10 <= 0.0) {
    throw NoSteadyStateError("reducible chain: no unique steady state");
  }
  if (p01 >= 1.0 && p10 >= 1.0) {
    throw NoSteadyStateError("periodic chain: steady state not reachable");
  }
  const double denom = p01 + p10;
  return {p10 / denom, p01 / denom};
}

BigramPrior bigram_from_transition(const TransitionMatrix& trans) {
  const Vec2 pi = steady_state(trans);
  BigramPrior out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.p[i][j] = pi[i] * trans.p[i][j];
  return out;
}

BigramPrior bigram_from_labels(std::span<const int> labels) {
  if (labels.size() < 2) {
    throw InvalidInputError("need at least 2 labels for pair counts");
  }
  Mat2 counts{{{0.0, 0.0}, {0.0, 0.0}}};
  check_label(labels[0]);
  for (std::size_t t = 1; t < labels.size(); ++t) {
    check_label(labels[t]);
    counts[labels[t - 1]][labels[t]] += 1.0;
  }
  const double pairs = static_cast<double>(labels.size() - 1);
  BigramPrior out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.p[i][j] = counts[i][j] / pairs;
  return out;
}

}  // namespace spdg
