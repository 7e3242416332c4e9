#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rmf/geometry.hpp"

namespace rmf {

/// Absolute slack on the ball-membership test, matching the tolerance the
/// cluster invariant is checked with.
inline constexpr double kMembershipTolerance = 1e-12;

/// Ball anchored on a reference-point pair: center is the exact midpoint,
/// radius half the pair distance.
struct ClusterGeometry {
  Point anchor_a;  // smaller f1 in 2D
  Point anchor_b;
  Point center;
  double radius = 0.0;
};

struct Cluster {
  ClusterGeometry geometry;
  CurvatureClass curvature = CurvatureClass::Linear;
  std::size_t anchor_a_index = 0;
  std::size_t anchor_b_index = 0;
  std::size_t span_lo = 0;  // reference indices whose points form local_curve
  std::size_t span_hi = 0;
  Point tangent_a;  // unit tangents at the anchors (2D only)
  Point tangent_b;
  std::vector<Point> local_curve;    // f1-sorted, includes both anchors
  std::vector<std::size_t> members;  // population indices, assignment order

  bool contains(const Point& p) const {
    return distance(p, geometry.center) <= geometry.radius + kMembershipTolerance;
  }
};

/// Every solution lands in exactly one cluster or in `unclustered`.
struct Partition {
  std::vector<Cluster> clusters;
  std::vector<std::size_t> unclustered;
};

/**
 * How reference points are paired into cluster anchors.
 *
 * The default tiles the front with non-overlapping stride-2 windows
 * (0,2), (2,4), ...; consecutive windows share an anchor. An explicit
 * pair list overrides the default and is required for 3D sets.
 */
class PairingScheme {
 public:
  static PairingScheme stride2() { return PairingScheme{}; }
  static PairingScheme explicit_pairs(
      std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    PairingScheme s;
    s.explicit_ = true;
    s.pairs_ = std::move(pairs);
    return s;
  }

  bool is_explicit() const { return explicit_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }

 private:
  bool explicit_ = false;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Exact midpoint / half-distance geometry; throws DomainError when a == b.
ClusterGeometry cluster_geometry(const Point& a, const Point& b);

/**
 * Partitions `pop` into reference-pair-anchored ball clusters.
 *
 * Each solution is tested against the clusters in order and assigned to
 * the first ball containing it; the rest go to `unclustered`. Cluster
 * order follows the reference ordering (default pairing) or the pair
 * list (explicit pairing).
 */
Partition build_clusters(const std::vector<Point>& pop, const ReferenceSet& ref,
                         const PairingScheme& pairing);

}  // namespace rmf
