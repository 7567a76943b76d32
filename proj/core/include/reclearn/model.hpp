#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace reclearn {

/// Hidden product value: the two-state Markov chain driving everything else.
enum class State : int { bad = 0, good = 1 };

/// Private signal a buyer receives about the current state (BSC output).
enum class Observation : int { v0 = 0, v1 = 1 };

/// Report action. Kept as an enum on purpose: "silent" is not a number and
/// must never enter arithmetic.
enum class Report : int { silent = 0, sent = 1 };

constexpr std::array<State, 2> kStates{State::bad, State::good};
constexpr std::array<Observation, 2> kObservations{Observation::v0,
                                                   Observation::v1};

/// Joint action of one buyer: buy/pass plus report/stay-silent.
struct ActionPair {
  bool buy = false;
  Report report = Report::silent;

  friend bool operator==(const ActionPair&, const ActionPair&) = default;

  /// Canonical index in {0,1,2,3}; buy is the major key.
  int index() const {
    return (buy ? 2 : 0) + (report == Report::sent ? 1 : 0);
  }
  static ActionPair from_index(int i);

  std::string pretty() const;  // e.g. "(buy=1,report=*)"
};

/// Model constants and solver/simulation configuration.
struct Params {
  double epsilon = 1e-3;  // state flip probability, in (0,1)
  double p = 0.2;         // BSC crossover probability, in (0,1/2)
  double c = 0.05;        // cost of reporting, >= 0

  int grid_size = 1001;   // belief grid points, >= 3
  double vi_tol = 1e-9;   // span-seminorm stopping tolerance
  long max_iters = 1000000;

  long horizon = 1000000;       // averaged simulation steps per replication
  int num_replications = 20;
  std::uint64_t seed = 1;
};

enum class GammaKind { learning, non_learning };

/// Partial function V -> A x B: the common agent's action. A buyer handed
/// gamma applies it to its private observation to get (a,b).
struct GammaFn {
  ActionPair on_v0;
  ActionPair on_v1;
  GammaKind kind = GammaKind::non_learning;
  bool dominated = false;
  int id = 0;  // canonical enumeration index, 0..15

  const ActionPair& apply(Observation v) const {
    return v == Observation::v0 ? on_v0 : on_v1;
  }
  bool is_learning() const { return kind == GammaKind::learning; }
  /// True if some branch files a report.
  bool reports_ever() const {
    return on_v0.report == Report::sent || on_v1.report == Report::sent;
  }
  std::string pretty() const;

  friend bool operator==(const GammaFn& a, const GammaFn& b) {
    return a.on_v0 == b.on_v0 && a.on_v1 == b.on_v1;
  }
};

/// All 16 partial functions in canonical order (id = 4*index(on_v0) +
/// index(on_v1)), each tagged learning/non-learning and dominated per the
/// reveal-through-action argument. Dominance is re-certified computationally
/// in the test suite rather than trusted.
const std::array<GammaFn, 16>& enumerate_gammas();

/// The 8 undominated functions, canonical order.
std::span<const GammaFn> non_dominated_gammas();

/// P(to | from) of the state chain: epsilon off-diagonal.
double state_kernel(const Params& params, State from, State to);

/// P(obs | state) of the observation channel: p off-diagonal.
double obs_kernel(const Params& params, State state, Observation obs);

/// Per-period reward: -c for a report, +-1/2 for buying a good/bad product.
double reward(const Params& params, State state, const ActionPair& action);

}  // namespace reclearn
