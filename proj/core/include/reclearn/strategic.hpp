#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "reclearn/dp.hpp"

namespace reclearn {

/// Grid points where the team and strategic choices agree (as functions
/// V -> A x B).
struct CoincidenceSet {
  std::vector<double> grid;
  std::vector<std::uint8_t> member;

  double fraction() const;
};

/// Report subsidy: `amount` is paid per report whenever the public belief
/// lies in the pay set, which is stored as inclusive index ranges of the
/// grid.
struct IndexRange {
  int lo = 0;
  int hi = 0;  // inclusive
};

struct IncentiveScheme {
  std::vector<double> grid;
  std::vector<IndexRange> pay_ranges;
  double amount = 0.0;

  bool pays_at(int index) const;
  /// Membership for an exact (off-grid) belief: nearest grid point.
  bool pays_at_belief(double pi) const;
  std::vector<std::uint8_t> pay_flags() const;
};

/// Myopic equilibrium policy: per grid point, argmax of the one-shot
/// expected reward only. Ties broken by canonical gamma order.
PolicyTable strategic_policy(const Params& params,
                             std::span<const GammaFn> gamma_set);

/// member[i] = (team choice at i == strategic choice at i). Throws
/// std::invalid_argument on mismatched grids.
CoincidenceSet coincidence_set(const PolicyTable& team,
                               const PolicyTable& strategic);

/// Subsidy of c (+ extra_bonus) per report on the set where the policies
/// differ. pay_on_difference=false flips to paying on the agreement set
/// instead (the literal indicator in the transfer formula); the default
/// follows the design intent of paying only where alignment is broken.
IncentiveScheme build_incentives(const Params& params, const CoincidenceSet& cs,
                                 bool pay_on_difference = true,
                                 double extra_bonus = 0.0);

/// Myopic reward with the subsidy folded into the reporting branches:
/// R^(pi,gamma) + amount * P(report | pi,gamma) when pi is in the pay set.
/// Folding keeps an exact-c subsidy an exact cancellation of the report
/// cost, so ties are clean.
double subsidized_reward(const Params& params, Belief belief,
                         const GammaFn& gamma, const IncentiveScheme& scheme);

/// Argmax of subsidized reward at one belief. Ties (within tie_tol) are
/// broken toward learning gammas that report, then canonical order.
int subsidized_argmax(const Params& params, Belief belief, bool in_pay_set,
                      double amount, std::span<const GammaFn> gamma_set,
                      double tie_tol = 1e-12);

/// Per grid point, argmax of the subsidized myopic reward.
PolicyTable incentivized_policy(const Params& params,
                                const IncentiveScheme& scheme,
                                std::span<const GammaFn> gamma_set);

}  // namespace reclearn
