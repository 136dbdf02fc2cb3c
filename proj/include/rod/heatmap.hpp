#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rod/io_util.hpp"
#include "rod/tsp.hpp"

namespace rod {

// n x n nonnegative edge scores: score(i, j) reflects an external model's
// belief that edge (i, j) belongs to the optimal tour. Scores are symmetrized
// on construction; the diagonal is ignored by consumers.
class Heatmap {
 public:
  Heatmap(int n, std::vector<double> raw_scores) : n_(n) {
    if (n_ < 1 || raw_scores.size() != static_cast<size_t>(n_) * n_) {
      throw std::invalid_argument("heatmap: expected " + std::to_string(n_) +
                                  "x" + std::to_string(n_) + " scores");
    }
    for (size_t i = 0; i < raw_scores.size(); ++i) {
      if (!(raw_scores[i] >= 0.0) || !std::isfinite(raw_scores[i])) {
        throw std::invalid_argument(
            "heatmap: negative or non-finite score at flat index " +
            std::to_string(i));
      }
    }
    scores_ = std::move(raw_scores);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const double s = 0.5 * (at(i, j) + at(j, i));
        scores_[flat(i, j)] = s;
        scores_[flat(j, i)] = s;
      }
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] double at(int i, int j) const { return scores_[flat(i, j)]; }

 private:
  [[nodiscard]] size_t flat(int i, int j) const {
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> scores_;
};

// Baseline heatmap scoring each edge by its inverse length; its greedy
// decode coincides with the nearest-neighbour construction.
inline Heatmap inverse_distance_heatmap(const TspInstance& inst,
                                        double eps = 1e-12) {
  const int n = inst.n();
  std::vector<double> s(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = inst.dist(i, j);
      s[static_cast<size_t>(i) * n + j] = 1.0 / (d < eps ? eps : d);
    }
  }
  return Heatmap(n, std::move(s));
}

inline Heatmap load_heatmap_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open heatmap file " + path.string());
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("heatmap " + path.string() +
                                 ": bad number '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::runtime_error("heatmap " + path.string() +
                               ": ragged rows, expected " + std::to_string(n) +
                               " columns");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Heatmap(n, std::move(flat));
}

inline Heatmap load_heatmap_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open heatmap file " + path.string());
  }
  nlohmann::json j;
  in >> j;
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("scores");
  if (static_cast<int>(rows.size()) != n) {
    throw std::runtime_error("heatmap " + path.string() + ": 'scores' has " +
                             std::to_string(rows.size()) + " rows, n = " +
                             std::to_string(n));
  }
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::runtime_error("heatmap " + path.string() + ": ragged rows");
    }
    for (const auto& v : row) flat.push_back(v.get<double>());
  }
  return Heatmap(n, std::move(flat));
}

inline Heatmap load_heatmap(const std::filesystem::path& path) {
  return path.extension() == ".json" ? load_heatmap_json(path)
                                     : load_heatmap_csv(path);
}

void save_heatmap_csv(const std::filesystem::path& path, const Heatmap& hm);

}  // namespace rod
