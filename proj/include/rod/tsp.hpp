#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rod/rng.hpp"

namespace rod {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Euclidean instance on the unit square. The full symmetric distance matrix
// is derived from the coordinates once and stored at full double precision.
class TspInstance {
 public:
  explicit TspInstance(std::vector<Point> coords)
      : n_(static_cast<int>(coords.size())), coords_(std::move(coords)) {
    if (n_ < 3) {
      throw std::invalid_argument("TspInstance: need at least 3 vertices, got " +
                                  std::to_string(n_));
    }
    dist_.assign(static_cast<size_t>(n_) * n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const double dx = coords_[i].x - coords_[j].x;
        const double dy = coords_[i].y - coords_[j].y;
        const double d = std::hypot(dx, dy);
        dist_[static_cast<size_t>(i) * n_ + j] = d;
        dist_[static_cast<size_t>(j) * n_ + i] = d;
      }
    }
    fp_ = compute_fingerprint();
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Point& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
  [[nodiscard]] const std::vector<Point>& coords() const { return coords_; }
  [[nodiscard]] double dist(int i, int j) const {
    return dist_[static_cast<size_t>(i) * n_ + j];
  }

  // Hash of n and the coordinate bit patterns; used to detect instance
  // mismatches between cooperating objects (completion tables, processes).
  [[nodiscard]] uint64_t fingerprint() const { return fp_; }

 private:
  uint64_t compute_fingerprint() const {
    uint64_t h = 0xcbf29ce484222325ull ^ static_cast<uint64_t>(n_);
    for (const Point& p : coords_) {
      uint64_t bx = 0;
      uint64_t by = 0;
      std::memcpy(&bx, &p.x, sizeof bx);
      std::memcpy(&by, &p.y, sizeof by);
      h = (h ^ bx) * 0x100000001b3ull;
      h = (h ^ by) * 0x100000001b3ull;
    }
    return h;
  }

  int n_;
  std::vector<Point> coords_;
  std::vector<double> dist_;
  uint64_t fp_ = 0;
};

// i.i.d. uniform vertices on [0,1]^2, fully determined by the seed.
inline TspInstance generate(int n, uint64_t seed) {
  if (n < 3) {
    throw std::invalid_argument("generate: need n >= 3, got " + std::to_string(n));
  }
  Rng rng(derive_seed(seed));
  std::vector<Point> coords;
  coords.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = rng.unit();
    const double y = rng.unit();
    coords.push_back({x, y});
  }
  return TspInstance(std::move(coords));
}

// Throws listing the offending vertex when `order` is not a permutation.
inline void validate_permutation(int n, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("tour has " + std::to_string(order.size()) +
                                " entries, instance has " + std::to_string(n));
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const int v : order) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("tour vertex " + std::to_string(v) +
                                  " out of range");
    }
    if (seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("tour repeats vertex " + std::to_string(v));
    }
    seen[static_cast<size_t>(v)] = 1;
  }
}

// Cyclic tour cost including the closing edge.
inline double tour_cost(const TspInstance& inst, const std::vector<int>& order) {
  validate_permutation(inst.n(), order);
  double c = 0.0;
  const int n = inst.n();
  for (int t = 0; t + 1 < n; ++t) c += inst.dist(order[static_cast<size_t>(t)], order[static_cast<size_t>(t) + 1]);
  c += inst.dist(order[static_cast<size_t>(n) - 1], order[0]);
  return c;
}

struct Tour {
  std::vector<int> order;
  double cost = 0.0;
};

inline Tour make_tour(const TspInstance& inst, std::vector<int> order) {
  const double c = tour_cost(inst, order);
  return Tour{std::move(order), c};
}

}  // namespace rod
