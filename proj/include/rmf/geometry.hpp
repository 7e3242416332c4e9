#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rmf/errors.hpp"

namespace rmf {

/**
 * A point in objective space (minimization convention).
 *
 * Only 2 or 3 objectives are supported; the unused third component of a
 * 2D point is kept at zero so generic vector math can ignore `dim`.
 */
struct Point {
  std::array<double, 3> v{0.0, 0.0, 0.0};
  int dim = 2;

  Point() = default;
  Point(double f1, double f2) : v{f1, f2, 0.0}, dim(2) {}
  Point(double f1, double f2, double f3) : v{f1, f2, f3}, dim(3) {}

  double f1() const { return v[0]; }
  double f2() const { return v[1]; }
  double f3() const { return v[2]; }

  double operator[](std::size_t i) const { return v[i]; }
  double& operator[](std::size_t i) { return v[i]; }

  bool operator==(const Point& o) const { return dim == o.dim && v == o.v; }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);

double dot(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);

/// True when every component is finite.
bool is_finite(const Point& p);

/// Unit vector in the direction of `a`; throws DomainError on zero length.
Point normalized(const Point& a);

/// Curvature of a reference-front segment, used to pick a grading rule.
enum class CurvatureClass { Convex, Concave, Linear };

const char* to_string(CurvatureClass c);

/**
 * An ordered sample of the true Pareto front.
 *
 * 2D sets are canonicalized to ascending first objective and must be
 * strictly increasing in f1 (duplicates rejected). 3D sets carry no
 * ordering; clustering then requires an explicit pairing.
 */
class ReferenceSet {
 public:
  ReferenceSet() = default;

  /// Validates and canonicalizes; throws DomainError on violation.
  static ReferenceSet canonical(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  int dim() const { return points_.empty() ? 0 : points_.front().dim; }

 private:
  std::vector<Point> points_;
};

/// Relative tolerance for calling a segment's curvature flat.
inline constexpr double kCurvatureEpsilonRel = 1e-6;

/**
 * Angle between two direction vectors, in [0, pi].
 *
 * Computed from atan2 of the cross and dot products, which stays accurate
 * for nearly parallel inputs. Symmetric and scale invariant; zero-length
 * input raises DomainError.
 */
double angle_between(const Point& u, const Point& v);

/**
 * Finite-difference tangent direction of a 2D reference set at index `i`.
 *
 * Uses the central difference of the two neighbors, one-sided at the
 * endpoints. The result is a unit vector oriented toward increasing f1.
 */
Point estimate_tangent(const ReferenceSet& ref, std::size_t i);

/**
 * Classifies the curvature of the reference segment covering indices
 * [span_lo, span_hi] (inclusive, at least 3 points): mean second divided
 * difference of f2 over f1, compared against kCurvatureEpsilonRel scaled
 * by the span's f2 range.
 */
CurvatureClass classify_curvature(const ReferenceSet& ref, std::size_t span_lo,
                                  std::size_t span_hi);

}  // namespace rmf
