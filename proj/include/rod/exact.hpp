#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rod/tsp.hpp"

namespace rod {

// Cost-to-finish table f(S, j): the minimal cost of visiting every vertex
// outside S starting from j and returning to vertex 0. S is a bitmask that
// always contains bit 0. Built once per instance, immutable afterwards, safe
// for concurrent reads.
class CompletionTable {
 public:
  static constexpr int kMaxN = 20;  // ~ n * 2^(n-1) doubles

  explicit CompletionTable(const TspInstance& inst)
      : n_(inst.n()), fingerprint_(inst.fingerprint()) {
    if (n_ > kMaxN) {
      throw std::domain_error(
          "held-karp table for n = " + std::to_string(n_) +
          " exceeds the exact bound n <= " + std::to_string(kMaxN) +
          "; import references computed externally instead");
    }
    dist_copy_.assign(static_cast<size_t>(n_) * n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) dist_copy_[idx2(i, j)] = inst.dist(i, j);
    build();
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] uint64_t instance_fingerprint() const { return fingerprint_; }

  // f(visited, current); `visited` must contain bit 0 and `current`.
  [[nodiscard]] double cost_to_finish(uint64_t visited, int current) const {
    check_state(visited, current);
    return f_[idx(visited, current)];
  }

  // Optimal tour cost from the initial state (only the start visited).
  [[nodiscard]] double optimal_cost() const { return f_[idx(1u, 0)]; }

  // First move of the optimal completion of (visited, current):
  // argmin over unvisited a of dist(current, a) + f(visited | a, a).
  // Ties break to the lowest vertex index.
  [[nodiscard]] int optimal_action(uint64_t visited, int current) const {
    check_state(visited, current);
    if (visited == full_mask()) {
      throw std::invalid_argument("optimal_action: state is terminal");
    }
    int best = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n_; ++a) {
      if (visited & bit(a)) continue;
      const double c = dist(current, a) + f_[idx(visited | bit(a), a)];
      if (c < best_cost) {
        best_cost = c;
        best = a;
      }
    }
    return best;
  }

  [[nodiscard]] uint64_t full_mask() const {
    return (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
  }

 private:
  static uint64_t bit(int v) { return 1ull << v; }
  [[nodiscard]] size_t idx2(int i, int j) const {
    return static_cast<size_t>(i) * n_ + j;
  }
  [[nodiscard]] double dist(int i, int j) const { return dist_copy_[idx2(i, j)]; }

  // Bit 0 is always set, so (visited >> 1) indexes 2^(n-1) masks.
  [[nodiscard]] size_t idx(uint64_t visited, int current) const {
    return static_cast<size_t>(visited >> 1) * n_ + current;
  }

  void check_state(uint64_t visited, int current) const {
    if (!(visited & 1ull) || current < 0 || current >= n_ ||
        !(visited & bit(current)) || (visited & ~full_mask())) {
      throw std::invalid_argument("completion table: malformed state");
    }
  }

  void build() {
    const uint64_t full = full_mask();
    f_.assign((static_cast<size_t>(1) << (n_ - 1)) * n_, 0.0);
    for (int j = 0; j < n_; ++j) f_[idx(full, j)] = dist(j, 0);
    // Supersets have a larger mask value, so a plain descending sweep
    // satisfies the Bellman dependency f(S, .) <- f(S + {a}, .).
    const uint64_t half = 1ull << (n_ - 1);
    for (uint64_t m = half - 1; m-- > 0;) {
      const uint64_t visited = (m << 1) | 1ull;
      for (int j = 0; j < n_; ++j) {
        if (!(visited & bit(j))) continue;
        double best = std::numeric_limits<double>::infinity();
        for (int a = 0; a < n_; ++a) {
          if (visited & bit(a)) continue;
          const double c = dist(j, a) + f_[idx(visited | bit(a), a)];
          if (c < best) best = c;
        }
        f_[idx(visited, j)] = best;
      }
    }
  }

  int n_;
  uint64_t fingerprint_;
  std::vector<double> dist_copy_;  // own copy so the table is self-contained
  std::vector<double> f_;
};

struct ReferenceSolution {
  std::string id;
  double cost = 0.0;
  std::optional<std::vector<int>> order;
  std::string source;      // "held-karp", "brute-force", "imported:...", "lk-multistart-K"
  bool validated = false;  // order recomputed against the instance

  // Whether this reference claims to be an exact optimum. Heuristic
  // best-known sources only bound the gap from one side.
  [[nodiscard]] bool claims_optimal() const {
    return source.rfind("lk-multistart", 0) != 0;
  }
};

// Exhaustive minimum over the (n-1)!/2 distinct tours with vertex 0 fixed
// first and orientation canonicalized. Intended as the independent check for
// the Held-Karp path; n is capped accordingly.
inline ReferenceSolution brute_force(const TspInstance& inst) {
  const int n = inst.n();
  if (n > 10) {
    throw std::domain_error("brute_force: n = " + std::to_string(n) +
                            " exceeds the enumeration bound n <= 10");
  }
  std::vector<int> rest(static_cast<size_t>(n) - 1);
  for (int i = 1; i < n; ++i) rest[static_cast<size_t>(i) - 1] = i;
  std::vector<int> best_order;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<int> order(static_cast<size_t>(n));
  order[0] = 0;
  do {
    // Skip the reversed duplicate of each tour.
    if (n > 3 && rest.front() > rest.back()) continue;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    double c = 0.0;
    for (int t = 0; t + 1 < n; ++t) c += inst.dist(order[static_cast<size_t>(t)], order[static_cast<size_t>(t) + 1]);
    c += inst.dist(order[static_cast<size_t>(n) - 1], 0);
    if (c < best_cost) {
      best_cost = c;
      best_order = order;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  ReferenceSolution ref;
  ref.cost = best_cost;
  ref.order = std::move(best_order);
  ref.source = "brute-force";
  ref.validated = true;
  return ref;
}

struct HeldKarpResult {
  ReferenceSolution solution;
  std::shared_ptr<const CompletionTable> table;
};

// Exact DP solve; the completion table is retained so optimal actions can be
// queried at any state later.
inline HeldKarpResult held_karp(const TspInstance& inst) {
  auto table = std::make_shared<const CompletionTable>(inst);
  const int n = inst.n();
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  order.push_back(0);
  uint64_t visited = 1ull;
  int current = 0;
  while (visited != table->full_mask()) {
    const int a = table->optimal_action(visited, current);
    order.push_back(a);
    visited |= 1ull << a;
    current = a;
  }
  ReferenceSolution ref;
  ref.cost = table->optimal_cost();
  ref.order = std::move(order);
  ref.source = "held-karp";
  ref.validated = true;
  return HeldKarpResult{std::move(ref), std::move(table)};
}

}  // namespace rod
