#pragma once

#include <array>

#include "reclearn/model.hpp"

namespace reclearn {

/// Public belief pi(1) = P(X_t = good | public history). pi(0) is implied.
struct Belief {
  double p1 = 0.5;
};

/// One public outcome (a,b) reachable under a gamma, with its probability
/// and the updated belief it leads to.
struct OutcomeBranch {
  ActionPair outcome;
  double prob = 0.0;
  Belief next;
};

/// Distribution over successor beliefs: at most two branches (gamma has at
/// most two distinct values).
struct SuccessorDistribution {
  std::array<OutcomeBranch, 2> branch{};
  int count = 0;

  const OutcomeBranch* begin() const { return branch.data(); }
  const OutcomeBranch* end() const { return branch.data() + count; }
};

/// P(outcome | pi, gamma) = sum_x pi(x) sum_v 1{gamma(v)=outcome} Q_v(v|x).
double outcome_likelihood(const Params& params, Belief belief,
                          const GammaFn& gamma, const ActionPair& outcome);

/// Bayes stage only: posterior over the CURRENT state x_t given the public
/// outcome. Throws std::domain_error on a zero-probability outcome; a
/// silent 0/0 renormalization would hide simulator bugs.
Belief bayes_posterior(const Params& params, Belief belief,
                       const GammaFn& gamma, const ActionPair& outcome);

/// Prediction stage only: push a belief about x_t through the state kernel.
Belief predict(const Params& params, Belief belief);

/// Full one-step update F(pi, gamma, a, b): Bayes on x_t, then prediction to
/// x_{t+1}. Independent of any policy by construction.
Belief belief_update(const Params& params, Belief belief, const GammaFn& gamma,
                     const ActionPair& outcome);

/// All outcome branches with positive probability; probabilities sum to 1.
SuccessorDistribution successor_distribution(const Params& params,
                                             Belief belief,
                                             const GammaFn& gamma);

/// Expected instantaneous reward R^(pi, gamma) =
/// sum_x sum_v pi(x) Q_v(v|x) R(x, gamma(v)).
double expected_reward(const Params& params, Belief belief,
                       const GammaFn& gamma);

/// P(b = report | pi, gamma): weight of the reporting branches.
double report_probability(const Params& params, Belief belief,
                          const GammaFn& gamma);

}  // namespace reclearn
