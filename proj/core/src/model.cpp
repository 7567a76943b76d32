#include "reclearn/model.hpp"

#include <stdexcept>

namespace reclearn {

ActionPair ActionPair::from_index(int i) {
  if (i < 0 || i > 3) {
    throw std::invalid_argument("ActionPair index out of range");
  }
  return ActionPair{i >= 2, (i & 1) != 0 ? Report::sent : Report::silent};
}

std::string ActionPair::pretty() const {
  std::string s = "(buy=";
  s += buy ? '1' : '0';
  s += ",report=";
  s += report == Report::sent ? "1" : "*";
  s += ')';
  return s;
}

std::string GammaFn::pretty() const {
  return "v0->" + on_v0.pretty() + " v1->" + on_v1.pretty();
}

namespace {

// A gamma is dominated when a report buys no information beyond what the
// public pair already carries: either both branches report (the silent
// symbol would have revealed v for free), or one branch reports while the
// buy actions already separate the observations.
bool is_dominated(const ActionPair& on_v0, const ActionPair& on_v1) {
  const bool rep0 = on_v0.report == Report::sent;
  const bool rep1 = on_v1.report == Report::sent;
  if (rep0 && rep1) return true;
  if ((rep0 || rep1) && on_v0.buy != on_v1.buy) return true;
  return false;
}

std::array<GammaFn, 16> build_gammas() {
  std::array<GammaFn, 16> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      GammaFn g;
      g.on_v0 = ActionPair::from_index(i);
      g.on_v1 = ActionPair::from_index(j);
      g.kind = g.on_v0 == g.on_v1 ? GammaKind::non_learning
                                  : GammaKind::learning;
      g.dominated = is_dominated(g.on_v0, g.on_v1);
      g.id = 4 * i + j;
      out[static_cast<std::size_t>(g.id)] = g;
    }
  }
  return out;
}

}  // namespace

const std::array<GammaFn, 16>& enumerate_gammas() {
  static const std::array<GammaFn, 16> table = build_gammas();
  return table;
}

std::span<const GammaFn> non_dominated_gammas() {
  static const std::vector<GammaFn> table = [] {
    std::vector<GammaFn> out;
    for (const GammaFn& g : enumerate_gammas()) {
      if (!g.dominated) out.push_back(g);
    }
    return out;
  }();
  return {table.data(), table.size()};
}

double state_kernel(const Params& params, State from, State to) {
  return from == to ? 1.0 - params.epsilon : params.epsilon;
}

double obs_kernel(const Params& params, State state, Observation obs) {
  return static_cast<int>(state) == static_cast<int>(obs) ? 1.0 - params.p
                                                          : params.p;
}

double reward(const Params& params, State state, const ActionPair& action) {
  double r = action.report == Report::sent ? -params.c : 0.0;
  if (action.buy) {
    r += state == State::good ? 0.5 : -0.5;
  }
  return r;
}

}  // namespace reclearn
