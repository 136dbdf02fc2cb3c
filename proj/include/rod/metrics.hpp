#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rod/core.hpp"
#include "rod/oracle.hpp"
#include "rod/parallel.hpp"

namespace rod {

enum class GapAggregation {
  kRatioOfSums,   // 1 - sum(ref) / sum(model), sums formed over the whole set
  kMeanOfRatios,  // mean over instances of the per-instance gap
};

struct GapReport {
  std::string dataset_id;
  std::vector<double> model_costs;
  std::vector<double> reference_costs;
  double gap = 0.0;            // 1 - c*/c convention
  double classical_gap = 0.0;  // (c - c*)/c* convention
  GapAggregation aggregation = GapAggregation::kRatioOfSums;
};

// Dataset-level optimality gap in both conventions. When the references are
// exact optima, a model cost below its reference (beyond tolerance) is a
// contradiction and raises; heuristic best-known references skip that check.
inline GapReport aggregate_gap(std::span<const double> model_costs,
                               std::span<const double> reference_costs,
                               GapAggregation aggregation = GapAggregation::kRatioOfSums,
                               bool references_are_optimal = true,
                               std::string dataset_id = {}) {
  if (model_costs.size() != reference_costs.size()) {
    throw std::invalid_argument("aggregate_gap: cost lists differ in length");
  }
  if (model_costs.empty()) {
    throw std::invalid_argument("aggregate_gap: empty cost lists");
  }
  for (size_t i = 0; i < reference_costs.size(); ++i) {
    if (!(reference_costs[i] > 0.0)) {
      throw std::invalid_argument("aggregate_gap: reference cost at index " +
                                  std::to_string(i) + " is not positive");
    }
    if (references_are_optimal &&
        model_costs[i] < reference_costs[i] * (1.0 - 1e-9)) {
      throw std::invalid_argument(
          "aggregate_gap: model cost " + std::to_string(model_costs[i]) +
          " beats the reference optimum " + std::to_string(reference_costs[i]) +
          " at index " + std::to_string(i));
    }
  }
  GapReport report;
  report.dataset_id = std::move(dataset_id);
  report.model_costs.assign(model_costs.begin(), model_costs.end());
  report.reference_costs.assign(reference_costs.begin(), reference_costs.end());
  report.aggregation = aggregation;
  if (aggregation == GapAggregation::kRatioOfSums) {
    double sum_model = 0.0;
    double sum_ref = 0.0;
    for (double c : model_costs) sum_model += c;
    for (double c : reference_costs) sum_ref += c;
    report.gap = 1.0 - sum_ref / sum_model;
    report.classical_gap = (sum_model - sum_ref) / sum_ref;
  } else {
    double g = 0.0;
    double cg = 0.0;
    for (size_t i = 0; i < model_costs.size(); ++i) {
      g += 1.0 - reference_costs[i] / model_costs[i];
      cg += (model_costs[i] - reference_costs[i]) / reference_costs[i];
    }
    report.gap = g / static_cast<double>(model_costs.size());
    report.classical_gap = cg / static_cast<double>(model_costs.size());
  }
  return report;
}

// Fraction of decisions flagged optimal across a set of rollout traces.
// Forced steps carry optimal = true by construction and are counted.
template <typename A>
double decision_accuracy(const std::vector<Rollout<A>>& traces) {
  size_t decisions = 0;
  size_t optimal = 0;
  for (const auto& t : traces) {
    decisions += t.decisions();
    optimal += t.optimal_decisions();
  }
  if (decisions == 0) {
    throw std::invalid_argument("decision_accuracy: no decisions in traces");
  }
  return static_cast<double>(optimal) / static_cast<double>(decisions);
}

struct RodReport {
  std::string dataset_id;
  double rod = 0.0;        // smallest grid alpha whose oracle gap <= model gap
  double step = 0.0;       // grid step k
  double model_gap = 0.0;  // 1 - c*/c convention
  uint64_t seed = 0;
  std::vector<std::pair<double, double>> curve;  // (alpha, oracle gap)
};

template <typename P>
  requires DecisionProcess<P>
struct RodInstance {
  std::string id;
  const P* process = nullptr;   // with an attached optimal-action table
  double reference_cost = 0.0;  // exact optimum
};

// Scans alpha = 0, k, 2k, ... and returns the first grid point whose oracle
// aggregate gap drops to the model's. Each grid point evaluates fresh
// seeded rollouts over the whole dataset; per-instance work may run on
// `workers` threads with aggregation in dataset order. The alpha = 1 point is
// exact by construction, so the scan always terminates there.
template <typename P>
  requires DecisionProcess<P>
RodReport compute_rod(const std::vector<RodInstance<P>>& dataset,
                      std::span<const double> model_costs,
                      const OracleConfig& base_config, double k,
                      unsigned workers = 1,
                      GapAggregation aggregation = GapAggregation::kRatioOfSums,
                      std::string dataset_id = {}) {
  if (dataset.empty()) {
    throw std::invalid_argument("compute_rod: empty dataset");
  }
  if (!(k > 0.0 && k <= 1.0)) {
    throw std::invalid_argument("compute_rod: step k must lie in (0, 1]");
  }
  base_config.validate();

  std::vector<double> reference_costs;
  reference_costs.reserve(dataset.size());
  for (const auto& item : dataset) reference_costs.push_back(item.reference_cost);
  const GapReport model_report =
      aggregate_gap(model_costs, reference_costs, aggregation, true);

  RodReport report;
  report.dataset_id = std::move(dataset_id);
  report.step = k;
  report.model_gap = model_report.gap;
  report.seed = base_config.seed;

  std::vector<double> oracle_costs(dataset.size(), 0.0);
  for (uint64_t grid = 0;; ++grid) {
    double alpha = static_cast<double>(grid) * k;
    const bool last = alpha >= 1.0;
    if (last) alpha = 1.0;

    OracleConfig cfg = base_config;
    cfg.alpha = alpha;
    cfg.seed = derive_seed(base_config.seed, grid);  // fresh stream per point
    cfg.keep_traces = false;
    parallel_for(dataset.size(), workers, [&](size_t i) {
      oracle_costs[i] =
          run_oracle(*dataset[i].process, cfg, dataset[i].id).mean_cost;
    });
    const GapReport oracle_report =
        aggregate_gap(oracle_costs, reference_costs, aggregation, false);
    report.curve.emplace_back(alpha, oracle_report.gap);
    if (oracle_report.gap <= report.model_gap || last) {
      report.rod = alpha;
      return report;
    }
  }
}

}  // namespace rod
