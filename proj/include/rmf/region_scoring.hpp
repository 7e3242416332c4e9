#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rmf/clustering.hpp"
#include "rmf/geometry.hpp"

namespace rmf {

/// Distance below which a solution counts as sitting on the sampled front.
inline constexpr double kFrontTolerance = 1e-9;

enum class RegionLabel { OnFront, Region1, Region2, Region3 };

const char* to_string(RegionLabel r);

struct Grade {
  double value = 0.0;  // clamped into the region's interval
  RegionLabel region = RegionLabel::Region3;
  double raw = 0.0;        // formula output before clamping
  bool degenerate = false; // a geometric guard fired
};

/**
 * Deterministic region cascade for a clustered 2D solution.
 *
 * OnFront when the point is within kFrontTolerance of the local-curve
 * polyline or on its non-dominated side. Region1 when it lies in the
 * band between the polyline and the chord (convex) or the anchor tangent
 * lines (concave). Everything else in the ball is Region2; linear
 * segments have no Region1 band.
 */
RegionLabel classify_region(const Point& p, const Cluster& c);

/// Optimal-region grade for a convex segment; clamped to [2, 3].
Grade score_region1_convex(const Point& d_point, const Cluster& c);

/// Concave optimal region: the suboptimal-region grade plus one.
Grade score_region1_concave(const Point& d_point, const Cluster& c);

/// Suboptimal-region grade inside the cluster ball; clamped to [1, 2].
/// Works in-plane for 3D points (plane spanned by the anchors and the
/// solution).
Grade score_region2(const Point& e_point, const Cluster& c);

/// Grades unclustered solutions from inverted min-max normalized nearest
/// reference distances; a degenerate spread maps everything to 0.5.
std::vector<Grade> score_region3(const std::vector<Point>& unclustered,
                                 const ReferenceSet& ref);

struct GradedEntry {
  Point solution;
  Grade grade;
  std::optional<std::size_t> cluster;  // index into Partition::clusters
};

struct GradedPopulation {
  std::vector<GradedEntry> entries;
};

/**
 * Routes every solution of a partition to its grade.
 *
 * 2D solutions go through the region cascade; in 3D the optimal band is
 * disabled and every clustered solution is scored by the suboptimal rule
 * in the plane it spans with its anchors. Output preserves population
 * order.
 */
GradedPopulation grade_population(const std::vector<Point>& pop,
                                  const Partition& part,
                                  const ReferenceSet& ref);

}  // namespace rmf
