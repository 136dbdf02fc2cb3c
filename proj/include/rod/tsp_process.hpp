#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rod/core.hpp"
#include "rod/exact.hpp"
#include "rod/tsp.hpp"

namespace rod {

// Tour construction from fixed start vertex 0: state = (visited set, current
// vertex), one decision per remaining vertex, n-1 decisions in total. The
// closing edge back to the start is charged on the final (forced) decision so
// that accumulated step costs equal the cyclic tour cost.
class TspProcess {
 public:
  using Action = int;

  struct State {
    uint64_t visited = 1ull;
    int current = 0;
  };

  // `table` answers optimal-action queries; pass nullptr only when the
  // process is used with policies that never ask for optimality flags.
  TspProcess(TspInstance instance, std::shared_ptr<const CompletionTable> table)
      : inst_(std::move(instance)), table_(std::move(table)), n_(inst_.n()) {
    if (n_ > 64) {
      throw std::domain_error("TspProcess: visited-set mask limits n to 64");
    }
    if (table_ && table_->instance_fingerprint() != inst_.fingerprint()) {
      throw std::invalid_argument(
          "TspProcess: completion table was built for a different instance");
    }
  }

  [[nodiscard]] State initial_state() const { return State{1ull, 0}; }

  [[nodiscard]] bool is_terminal(const State& s) const {
    return std::popcount(s.visited) == n_;
  }

  // Unvisited vertices in ascending index order.
  [[nodiscard]] std::vector<int> valid_actions(const State& s) const {
    std::vector<int> actions;
    actions.reserve(static_cast<size_t>(n_ - std::popcount(s.visited)));
    for (int v = 0; v < n_; ++v) {
      if (!(s.visited & (1ull << v))) actions.push_back(v);
    }
    return actions;
  }

  [[nodiscard]] State transition(const State& s, int a) const {
    check_action(s, a);
    return State{s.visited | (1ull << a), a};
  }

  [[nodiscard]] double cost(const State& s, int a) const {
    check_action(s, a);
    double c = inst_.dist(s.current, a);
    if (std::popcount(s.visited) == n_ - 1) c += inst_.dist(a, 0);
    return c;
  }

  [[nodiscard]] int optimal_action(const State& s) const {
    if (!table_) {
      throw std::logic_error(
          "TspProcess: optimal_action requires a completion table");
    }
    return table_->optimal_action(s.visited, s.current);
  }

  // Position of the variable being decided, 1-based; n would be terminal.
  [[nodiscard]] int variable_index(const State& s) const {
    return std::popcount(s.visited);
  }

  [[nodiscard]] const TspInstance& instance() const { return inst_; }
  [[nodiscard]] const std::shared_ptr<const CompletionTable>& table() const {
    return table_;
  }

  // Permutation induced by a rollout: start vertex followed by the actions.
  [[nodiscard]] std::vector<int> order_of(const Rollout<int>& r) const {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n_));
    order.push_back(0);
    for (const auto& step : r.steps) order.push_back(step.action);
    return order;
  }

 private:
  void check_action(const State& s, int a) const {
    if (a < 0 || a >= n_ || (s.visited & (1ull << a))) {
      throw std::invalid_argument("TspProcess: invalid action " +
                                  std::to_string(a));
    }
  }

  TspInstance inst_;
  std::shared_ptr<const CompletionTable> table_;
  int n_;
};

inline bool operator==(const TspProcess::State& a, const TspProcess::State& b) {
  return a.visited == b.visited && a.current == b.current;
}

// Builds the exact completion table for the instance unless one is supplied.
inline TspProcess as_process(const TspInstance& inst,
                             std::shared_ptr<const CompletionTable> table = nullptr) {
  if (!table) table = std::make_shared<const CompletionTable>(inst);
  return TspProcess(inst, std::move(table));
}

}  // namespace rod
