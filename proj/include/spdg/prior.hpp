#ifndef SPDG_PRIOR_HPP
#define SPDG_PRIOR_HPP

#include <span>
#include <variant>

#include "spdg/common.hpp"

namespace spdg {

// Label-frequency prior (p0, p1).
struct UnigramPrior {
  Vec2 p{0.5, 0.5};
};

// Row-stochastic transition matrix, P[i][j] = p(y_t = j | y_{t-1} = i).
struct TransitionMatrix {
  Mat2 p{{{0.5, 0.5}, {0.5, 0.5}}};
};

// Joint adjacent-pair prior, P[i][j] = p(y_{t-1} = i, y_t = j).
struct BigramPrior {
  Mat2 p{{{0.25, 0.25}, {0.25, 0.25}}};
};

using Prior = std::variant<UnigramPrior, BigramPrior>;

// Validated constructors. Entries must be nonnegative; a total (or row sum)
// off from 1 by at most 1e-9 is renormalized, anything worse is rejected.
UnigramPrior make_unigram(const Vec2& p);
TransitionMatrix make_transition(const Mat2& p);
BigramPrior make_bigram(const Mat2& p);

UnigramPrior unigram_from_labels(std::span<const int> labels);

// Unique stationary distribution pi with pi*P = pi, via the 2x2 closed form
// pi = (P[1][0], P[0][1]) / (P[0][1] + P[1][0]).
// Rejects the identity (every distribution stationary) and the pure
// alternation (periodic chain).
Vec2 steady_state(const TransitionMatrix& trans);

// P_LM[i][j] = pi[i] * trans[i][j].
BigramPrior bigram_from_transition(const TransitionMatrix& trans);

// Empirical pair counts over adjacent positions, normalized by T-1.
BigramPrior bigram_from_labels(std::span<const int> labels);

}  // namespace spdg

#endif
