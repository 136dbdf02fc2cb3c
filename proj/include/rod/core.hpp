#pragma once

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

namespace rod {

// Sequential decision view of a combinatorial problem: a chain of variable
// assignments with per-step costs and an optimal-action query that must be
// answerable at every reachable state, on or off the optimal trajectory.
// Implementations are immutable after construction.
template <typename P>
concept DecisionProcess = requires(const P& p, const typename P::State& s,
                                   const typename P::Action& a) {
  typename P::State;
  typename P::Action;
  { p.initial_state() } -> std::same_as<typename P::State>;
  { p.valid_actions(s) } -> std::same_as<std::vector<typename P::Action>>;
  { p.transition(s, a) } -> std::same_as<typename P::State>;
  { p.cost(s, a) } -> std::convertible_to<double>;
  { p.is_terminal(s) } -> std::convertible_to<bool>;
  { p.optimal_action(s) } -> std::same_as<typename P::Action>;
  { p.variable_index(s) } -> std::convertible_to<int>;
};

template <typename Action>
struct RolloutStep {
  int state_index = 0;  // position of the decided variable, 1-based
  Action action{};
  double cost = 0.0;
  bool forced = false;  // only one valid action existed
  bool optimal = false; // forced steps always count as optimal
};

template <typename Action>
struct Rollout {
  std::vector<RolloutStep<Action>> steps;
  double total_cost = 0.0;

  [[nodiscard]] size_t decisions() const { return steps.size(); }
  [[nodiscard]] size_t optimal_decisions() const {
    size_t k = 0;
    for (const auto& s : steps) k += s.optimal ? 1 : 0;
    return k;
  }
  [[nodiscard]] size_t forced_decisions() const {
    size_t k = 0;
    for (const auto& s : steps) k += s.forced ? 1 : 0;
    return k;
  }
};

// Plays `policy` from the initial state until termination. Decisions are
// final: no look-ahead, no backtracking, each state is seen exactly once.
template <typename P, typename Policy>
  requires DecisionProcess<P>
Rollout<typename P::Action> run_policy(const P& process, Policy&& policy) {
  Rollout<typename P::Action> out;
  auto state = process.initial_state();
  while (!process.is_terminal(state)) {
    const auto actions = process.valid_actions(state);
    if (actions.empty()) {
      throw std::logic_error(
          "run_policy: non-terminal state has no valid action");
    }
    const typename P::Action chosen = policy(state);
    if (std::find(actions.begin(), actions.end(), chosen) == actions.end()) {
      throw std::invalid_argument(
          "run_policy: policy returned an invalid action at step " +
          std::to_string(out.steps.size() + 1));
    }
    const bool forced = actions.size() == 1;
    const bool optimal = forced || chosen == process.optimal_action(state);
    const double step_cost = process.cost(state, chosen);
    out.steps.push_back({process.variable_index(state), chosen, step_cost,
                         forced, optimal});
    out.total_cost += step_cost;
    state = process.transition(state, chosen);
  }
  return out;
}

}  // namespace rod
