#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rmf/clustering.hpp"
#include "rmf/region_scoring.hpp"

namespace rmf {

/// Sum of all solution grades. Larger is better.
double convergence(const GradedPopulation& g);

/// Mean squared deviation of per-cluster mean grades from the fixed
/// target k (empty clusters contribute mean 0). Smaller is better.
double diversity(const GradedPopulation& g, const Partition& part,
                 double k = 3.0);

struct AlgorithmInput {
  std::string name;
  double convergence = 0.0;
  double diversity = 0.0;
};

struct AlgorithmScore {
  std::string name;
  double convergence = 0.0;
  double diversity = 0.0;
  double s1 = 0.0;  // min-max normalized convergence
  double s2 = 0.0;  // inverted min-max normalized diversity
  double score = 0.0;
};

struct ComparisonResult {
  double alpha = 0.5;
  double beta = 0.5;
  std::vector<AlgorithmScore> ranking;  // score descending
};

/**
 * Weighed combined score over several algorithm results.
 *
 * S1 = (conv - min)/(max - min); S2 = (div_max - div)/(div_max - div_min);
 * a degenerate span maps to 0.5 for everyone. Ranking is by score, ties
 * broken by higher S1 and then by input order.
 */
ComparisonResult combined_score(const std::vector<AlgorithmInput>& results,
                                double alpha = 0.5, double beta = 0.5);

struct ObservationWindow {
  Point start;
  Point end;
};

struct WindowStat {
  double start_f1 = 0.0;
  double end_f1 = 0.0;
  bool catch_all = false;
  std::size_t cluster_count = 0;
  double convergence = 0.0;
  std::optional<double> diversity;  // absent when the window holds no cluster
};

/**
 * Convergence/diversity restricted to observation windows.
 *
 * A cluster belongs to a window when its center's f1 falls inside
 * [start.f1, end.f1]; clusters matched by no window are reported under a
 * trailing catch-all entry (emitted only when non-empty).
 */
std::vector<WindowStat> local_report(const GradedPopulation& g,
                                     const Partition& part,
                                     const std::vector<ObservationWindow>& windows);

/// Inverted generational distance: mean over reference points of the
/// distance to the nearest solution. Smaller is better.
double igd(const std::vector<Point>& solutions, const ReferenceSet& reference);

struct EvaluationReport {
  double convergence = 0.0;
  double diversity = 0.0;
  std::vector<double> cluster_means;
  std::array<std::size_t, 4> region_histogram{0, 0, 0, 0};  // RegionLabel order
  std::vector<WindowStat> local_windows;
};

}  // namespace rmf
