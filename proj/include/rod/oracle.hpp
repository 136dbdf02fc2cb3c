#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rod/core.hpp"
#include "rod/rng.hpp"

namespace rod {

struct OracleConfig {
  double alpha = 1.0;               // probability of taking the optimal action
  int rollouts_per_instance = 1;
  uint64_t seed = 0;
  bool exclude_optimal_in_sampling = true;
  double epsilon_cost = 1e-12;      // clamp before inverting step costs
  bool keep_traces = false;

  void validate() const {
    if (alpha < 0.0 || alpha > 1.0) {
      throw std::invalid_argument("oracle: alpha must lie in [0, 1]");
    }
    if (rollouts_per_instance < 1) {
      throw std::invalid_argument("oracle: rollouts_per_instance must be >= 1");
    }
    if (epsilon_cost <= 0.0) {
      throw std::invalid_argument("oracle: epsilon_cost must be positive");
    }
  }
};

// Normalized inverse-cost weights: w_i = K_i^-1 / sum K_j^-1 with costs
// clamped below by eps, so zero-cost actions become near-certain picks
// instead of dividing by zero.
inline std::vector<double> inverse_cost_weights(std::span<const double> costs,
                                                double eps) {
  if (costs.empty()) {
    throw std::invalid_argument("inverse_cost_weights: empty candidate set");
  }
  std::vector<double> w(costs.size());
  double total = 0.0;
  for (size_t i = 0; i < costs.size(); ++i) {
    const double c = costs[i] < eps ? eps : costs[i];
    w[i] = 1.0 / c;
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

// Draws one action with probability proportional to the inverse of its step
// cost. `actions` and `costs` are parallel.
template <typename A>
A sample_suboptimal(std::span<const A> actions, std::span<const double> costs,
                    double eps, Rng& rng) {
  if (actions.size() != costs.size() || actions.empty()) {
    throw std::invalid_argument("sample_suboptimal: malformed candidate set");
  }
  const std::vector<double> w = inverse_cost_weights(costs, eps);
  const double u = rng.unit();
  double acc = 0.0;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    acc += w[i];
    if (u < acc) return actions[i];
  }
  return actions.back();
}

// One oracle decision: the optimal action with probability alpha, otherwise
// an inverse-cost-weighted draw over the remaining actions (optionally still
// including the optimal one). Forced single-action steps bypass the draw.
template <typename P>
  requires DecisionProcess<P>
typename P::Action theta(const P& process, const typename P::State& state,
                         const OracleConfig& cfg, Rng& rng) {
  const auto actions = process.valid_actions(state);
  if (actions.empty()) {
    throw std::logic_error("theta: no valid action");
  }
  if (actions.size() == 1) return actions.front();

  const double eps_draw = rng.unit_open_zero();  // (0,1], so alpha 0/1 are exact
  const typename P::Action best = process.optimal_action(state);
  if (eps_draw <= cfg.alpha) return best;

  std::vector<typename P::Action> candidates;
  candidates.reserve(actions.size());
  for (const auto& a : actions) {
    if (cfg.exclude_optimal_in_sampling && a == best) continue;
    candidates.push_back(a);
  }
  if (candidates.empty()) candidates = actions;
  std::vector<double> costs;
  costs.reserve(candidates.size());
  for (const auto& a : candidates) costs.push_back(process.cost(state, a));
  return sample_suboptimal<typename P::Action>(candidates, costs,
                                               cfg.epsilon_cost, rng);
}

template <typename A>
struct OracleOutcome {
  std::string instance_id;
  std::vector<double> rollout_costs;
  double mean_cost = 0.0;
  std::vector<Rollout<A>> traces;  // populated only with cfg.keep_traces
};

// Independent seeded rollouts of the alpha-oracle on one instance. Stream
// seeds derive from (seed, instance id, rollout index), so results do not
// depend on scheduling.
template <typename P>
  requires DecisionProcess<P>
OracleOutcome<typename P::Action> run_oracle(const P& process,
                                             const OracleConfig& cfg,
                                             std::string_view instance_id) {
  cfg.validate();
  OracleOutcome<typename P::Action> out;
  out.instance_id = std::string(instance_id);
  out.rollout_costs.reserve(static_cast<size_t>(cfg.rollouts_per_instance));
  double total = 0.0;
  for (int r = 0; r < cfg.rollouts_per_instance; ++r) {
    Rng rng(derive_seed(cfg.seed, fnv1a(instance_id), static_cast<uint64_t>(r)));
    auto rollout = run_policy(process, [&](const typename P::State& s) {
      return theta(process, s, cfg, rng);
    });
    total += rollout.total_cost;
    out.rollout_costs.push_back(rollout.total_cost);
    if (cfg.keep_traces) out.traces.push_back(std::move(rollout));
  }
  out.mean_cost = total / cfg.rollouts_per_instance;
  return out;
}

}  // namespace rod
