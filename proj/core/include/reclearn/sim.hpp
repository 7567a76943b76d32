#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reclearn/dp.hpp"
#include "reclearn/strategic.hpp"

namespace reclearn {

/// splitmix64 step; used to derive independent per-replication streams.
std::uint64_t mix64(std::uint64_t x);

/// One stream seed per replication, derived from (seed, replication index).
std::vector<std::uint64_t> replication_seeds(std::uint64_t seed, int count);

/// Deterministic uniform generator. mt19937_64 with 53-bit mantissa draws:
/// identical output on every platform, no library distributions involved.
class SimRng {
 public:
  explicit SimRng(std::uint64_t stream_seed) : eng_(stream_seed) {}

  double uniform() {
    ++draws_;
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  bool bernoulli(double prob) { return uniform() < prob; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 eng_;
  std::uint64_t draws_ = 0;
};

/// Maps the current exact public belief to a gamma. Implementations must be
/// pure so replications can run in parallel.
class DecisionRule {
 public:
  virtual ~DecisionRule() = default;
  virtual const GammaFn& choose(Belief belief) const = 0;
  virtual std::string_view name() const = 0;
};

/// One-step greedy against a converged team value table at the exact
/// belief (no grid snapping).
class GreedyTeamRule final : public DecisionRule {
 public:
  GreedyTeamRule(const Params& params, ValueTable table,
                 std::span<const GammaFn> gamma_set);
  const GammaFn& choose(Belief belief) const override;
  std::string_view name() const override { return "team-greedy"; }

 private:
  Params params_;
  ValueTable table_;
  std::vector<GammaFn> gammas_;
};

/// Exact myopic argmax of the one-shot expected reward (strategic play).
class MyopicRule final : public DecisionRule {
 public:
  MyopicRule(const Params& params, std::span<const GammaFn> gamma_set);
  const GammaFn& choose(Belief belief) const override;
  std::string_view name() const override { return "strategic-myopic"; }

 private:
  Params params_;
  std::vector<GammaFn> gammas_;
};

/// Myopic argmax of the subsidized reward (incentivized strategic play).
class SubsidizedMyopicRule final : public DecisionRule {
 public:
  SubsidizedMyopicRule(const Params& params, IncentiveScheme scheme,
                       std::span<const GammaFn> gamma_set);
  const GammaFn& choose(Belief belief) const override;
  std::string_view name() const override { return "incentivized-myopic"; }

 private:
  Params params_;
  IncentiveScheme scheme_;
  std::vector<GammaFn> gammas_;
};

/// Nearest-grid-point lookup into a precomputed policy table. Faster but
/// quantized; kept behind a flag for speed comparisons.
class GridSnapRule final : public DecisionRule {
 public:
  explicit GridSnapRule(PolicyTable table);
  const GammaFn& choose(Belief belief) const override;
  std::string_view name() const override { return "grid-snap"; }

 private:
  PolicyTable table_;
};

struct SimOptions {
  long horizon = 1000000;   // steps that enter the averages
  long burn_in = 10000;     // discarded steps before averaging
  double initial_belief = 0.5;  // also P(X_1 = good)
  /// When > 0, every `stride` steps the tracked belief is recomputed from
  /// the recorded outcome history and compared (testing hook).
  long consistency_stride = 0;
  double consistency_tol = 1e-9;
};

struct TrajectoryStats {
  double avg_reward = 0.0;
  double avg_payment = 0.0;
  double frac_in_payset = 0.0;
  double frac_learning = 0.0;
  long horizon = 0;
  std::uint64_t seed = 0;
  std::uint64_t draw_count = 0;
};

/// Simulate one trajectory: draw the hidden chain and observations, act by
/// `rule`, track the exact public belief, accrue reward and (when `scheme`
/// is given) subsidy payments. Deterministic given stream_seed.
TrajectoryStats simulate(const Params& params, const DecisionRule& rule,
                         const IncentiveScheme* scheme,
                         std::uint64_t stream_seed, const SimOptions& options);

struct RegimeSummary {
  double mean_reward = 0.0;
  double se_reward = 0.0;
  double mean_payment = 0.0;
  double se_payment = 0.0;
  double mean_frac_payset = 0.0;
  double mean_frac_learning = 0.0;
};

struct ReplicationRow {
  std::string regime;
  int replication = 0;
  std::uint64_t seed = 0;
  TrajectoryStats stats;
};

struct ComparisonReport {
  RegimeSummary team;
  RegimeSummary strategic;
  RegimeSummary incentivized;
  RegimeSummary incentivized_net;  // reward minus designer payments
  /// Paired (common-random-number) gaps with their standard errors.
  double gap_team_minus_incentivized = 0.0;
  double se_gap_team_minus_incentivized = 0.0;
  double gap_incentivized_minus_strategic = 0.0;
  double se_gap_incentivized_minus_strategic = 0.0;
  long horizon = 0;
  long burn_in = 0;
  int replications = 0;
  std::vector<ReplicationRow> rows;
};

/// Inputs for the four-way comparison. Policies are consulted only in
/// grid-snap mode; the default exact-belief mode re-derives decisions from
/// the value table / myopic argmax.
struct RegimeInputs {
  const ValueTable* team_value = nullptr;
  const PolicyTable* team_policy = nullptr;
  const PolicyTable* strategic_policy = nullptr;
  const PolicyTable* incentivized_policy = nullptr;
  const IncentiveScheme* scheme = nullptr;
  std::span<const GammaFn> gamma_set;
  bool grid_snap = false;
};

/// Run every regime on every seed with common random numbers (regimes
/// consume identical draw sequences) and aggregate means and standard
/// errors. Requires >= 2 seeds.
ComparisonReport compare_regimes(const Params& params,
                                 const RegimeInputs& inputs,
                                 std::span<const std::uint64_t> seeds,
                                 const SimOptions& options);

/// Normalized occupancy of the public belief over equal-width bins.
std::vector<double> occupancy_profile(const Params& params,
                                      const DecisionRule& rule,
                                      const IncentiveScheme* scheme,
                                      std::uint64_t stream_seed,
                                      const SimOptions& options, int bins);

}  // namespace reclearn
