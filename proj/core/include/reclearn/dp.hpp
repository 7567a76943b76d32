#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "reclearn/belief.hpp"
#include "reclearn/model.hpp"

namespace reclearn {

/// Uniform belief grid on [0,1] including both endpoints.
std::vector<double> make_belief_grid(int grid_size);

/// Discretized relative value function V with its gain rho. V is pinned to
/// zero at ref_index (the grid point nearest 0.5).
struct ValueTable {
  std::vector<double> grid;
  std::vector<double> values;
  double rho = 0.0;
  int ref_index = 0;

  /// Linear interpolation of V at an arbitrary belief in [0,1].
  double interpolate(double pi) const;
};

enum class Regime { team, strategic, incentivized };

const char* regime_name(Regime regime);

/// Chosen gamma per grid point, stored by canonical id.
struct PolicyTable {
  std::vector<double> grid;
  std::vector<int> gamma_ids;
  Regime regime = Regime::team;

  const GammaFn& choice(std::size_t i) const {
    return enumerate_gammas()[static_cast<std::size_t>(gamma_ids[i])];
  }
};

struct BackupResult {
  double value = 0.0;
  int gamma_id = 0;
};

/// One Bellman backup at an arbitrary belief:
///   max_gamma R^(pi,gamma) + sum_branches prob * V_interp(next),
/// ties broken by canonical gamma order.
BackupResult bellman_backup(const Params& params, const ValueTable& table,
                            Belief belief, std::span<const GammaFn> gamma_set);

/// Thrown when relative value iteration fails to meet vi_tol in max_iters.
class solve_error : public std::runtime_error {
 public:
  solve_error(const std::string& what, double span, long iterations)
      : std::runtime_error(what), final_span(span), iterations(iterations) {}
  double final_span;
  long iterations;
};

struct SolveResult {
  ValueTable value;
  PolicyTable policy;
  long iterations = 0;
  double final_span = 0.0;
};

/// Relative value iteration for the average-reward Bellman equation
/// rho + V(pi) = max_gamma [ R^(pi,gamma) + E{V(pi') | pi,gamma} ] on the
/// belief grid. Stops when the span seminorm of successive un-normalized
/// backups drops below vi_tol; throws solve_error otherwise.
SolveResult solve_average_reward(const Params& params,
                                 std::span<const GammaFn> gamma_set);

/// |rho + V(pi) - max_gamma backup(pi)| at a probe belief; small at grid
/// points of a converged table, interpolation-limited off grid.
double bellman_residual(const Params& params, const ValueTable& table,
                        const PolicyTable& policy, Belief probe,
                        std::span<const GammaFn> gamma_set);

}  // namespace reclearn
