#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rmf/evaluation.hpp"
#include "rmf/geometry.hpp"
#include "rmf/metrics.hpp"

namespace rmf {

enum class FrontShape { ConvexSqrt, ConcaveQuad, Linear };

/// Synthetic 2D front: n_points equally spaced in f1 over [f1_lo, f1_hi],
/// endpoints included.
struct FrontSpec {
  FrontShape shape = FrontShape::ConvexSqrt;
  std::size_t n_points = 3;
  double f1_lo = 0.0;
  double f1_hi = 1.0;
};

/// ConvexSqrt: f2 = 1 - sqrt(f1); ConcaveQuad: f2 = 1 - f1^2;
/// Linear: f2 = 1 - f1.
ReferenceSet generate_front(const FrontSpec& spec);

/**
 * Loads a population from CSV: one solution per row, 2 or 3 comma
 * separated decimal fields. A non-numeric first row is treated as a
 * header and skipped. Ragged rows and non-finite values raise ParseError
 * naming the offending row.
 */
std::vector<Point> load_population_csv(const std::string& path);

/// Same format as load_population_csv, then canonicalized + validated.
ReferenceSet load_reference_csv(const std::string& path);

/// Pairing file: one pair of zero-based reference indices per line,
/// whitespace separated.
std::vector<std::pair<std::size_t, std::size_t>> load_pairing_file(
    const std::string& path);

void save_points_csv(const std::vector<Point>& points, const std::string& path);

/// Companion plot-data path for a report written to `report_path`.
std::string plot_data_path(const std::string& report_path);

/**
 * Writes the evaluation report as a JSON tree (all aggregate fields plus
 * per-solution grades and region labels; doubles round-trip losslessly)
 * and a companion plot-data CSV with one `f1,f2[,f3],grade,region` line
 * per solution.
 */
void save_report(const EvaluationReport& report, const GradedPopulation& graded,
                 const std::string& path);

/// Writes a comparison ranking as a JSON tree.
void save_comparison(const ComparisonResult& cmp, const std::string& path);

}  // namespace rmf
