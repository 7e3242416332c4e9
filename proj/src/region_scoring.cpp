#include "rmf/region_scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rmf {

const char* to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::OnFront: return "on_front";
    case RegionLabel::Region1: return "region1";
    case RegionLabel::Region2: return "region2";
    case RegionLabel::Region3: return "region3";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

double clamp(double x, double lo, double hi) { return std::min(hi, std::max(lo, x)); }

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double polyline_distance(const Point& p, const std::vector<Point>& curve) {
  if (curve.size() == 1) return distance(p, curve.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < curve.size(); ++i)
    best = std::min(best, point_segment_distance(p, curve[i], curve[i + 1]));
  return best;
}

// Linear interpolation of the curve's f2 at x; callers keep x inside the
// curve's f1 span.
double polyline_f2_at(const std::vector<Point>& curve, double x) {
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (x <= curve[i + 1].f1()) {
      const double t = (x - curve[i].f1()) / (curve[i + 1].f1() - curve[i].f1());
      return curve[i].f2() + t * (curve[i + 1].f2() - curve[i].f2());
    }
  }
  return curve.back().f2();
}

// Weak dominance of p by any point of the polyline (minimization): some
// curve point q with q.f1 <= p.f1 and q.f2 <= p.f2. Uses a running
// minimum so non-monotone curves are handled too.
bool dominated_by_polyline(const Point& p, const std::vector<Point>& curve) {
  if (p.f1() < curve.front().f1()) return false;
  const double xc = std::min(p.f1(), curve.back().f1());
  double lowest = polyline_f2_at(curve, xc);
  for (const Point& q : curve) {
    if (q.f1() > xc) break;
    lowest = std::min(lowest, q.f2());
  }
  return p.f2() >= lowest;
}

// f2 of the line through `a` with direction `dir` at abscissa x; dir has
// positive f1 component for tangents of an f1-sorted reference set.
double line_f2_at(const Point& a, const Point& dir, double x) {
  return a.f2() + (x - a.f1()) * (dir.f2() / dir.f1());
}

}  // namespace

RegionLabel classify_region(const Point& p, const Cluster& c) {
  const std::vector<Point>& curve = c.local_curve;

  if (polyline_distance(p, curve) <= kFrontTolerance) return RegionLabel::OnFront;
  if (!dominated_by_polyline(p, curve)) return RegionLabel::OnFront;

  const Point& a = c.geometry.anchor_a;
  const Point& b = c.geometry.anchor_b;
  const bool in_span = a.f1() <= p.f1() && p.f1() <= b.f1();

  if (in_span && c.curvature == CurvatureClass::Convex) {
    const double t = (p.f1() - a.f1()) / (b.f1() - a.f1());
    const double chord = a.f2() + t * (b.f2() - a.f2());
    if (p.f2() <= chord) return RegionLabel::Region1;
  }
  if (in_span && c.curvature == CurvatureClass::Concave) {
    if (p.f2() <= line_f2_at(a, c.tangent_a, p.f1()) &&
        p.f2() <= line_f2_at(b, c.tangent_b, p.f1()))
      return RegionLabel::Region1;
  }
  return RegionLabel::Region2;
}

Grade score_region1_convex(const Point& d_point, const Cluster& c) {
  const Point& a = c.geometry.anchor_a;
  const Point& b = c.geometry.anchor_b;
  const double d = distance(a, b);
  const double d2 = distance(a, d_point);

  const double beta = angle_between(c.tangent_a, b - a);
  if (beta == 0.0) {
    // Tangent parallel to the chord: the band collapses.
    return Grade{2.0, RegionLabel::Region1, 2.0, true};
  }
  double raw;
  if (d2 == 0.0) {
    raw = 3.0;  // coincides with anchor A
  } else {
    const double alpha = angle_between(c.tangent_a, d_point - a);
    const double d1 = alpha / beta * d;
    if (d1 == 0.0)
      raw = 2.0 + 2.0 * d2 / d;  // limit of the far branch as alpha -> 0
    else if (d2 > d1 / 2.0)
      raw = 2.0 + (2.0 * d2 - d1) / d1 * (alpha / beta);
    else
      raw = 3.0 - 2.0 * d2 / d1 * (alpha / beta);
  }
  return Grade{clamp(raw, 2.0, 3.0), RegionLabel::Region1, raw, false};
}

Grade score_region1_concave(const Point& d_point, const Cluster& c) {
  const Grade r2 = score_region2(d_point, c);
  const double raw = r2.value + 1.0;
  return Grade{clamp(raw, 2.0, 3.0), RegionLabel::Region1, raw, r2.degenerate};
}

Grade score_region2(const Point& e_point, const Cluster& c) {
  const Point& a = c.geometry.anchor_a;
  const Point& b = c.geometry.anchor_b;
  const double radius = c.geometry.radius;

  const Point ab = b - a;
  const Point u_ab = normalized(ab);
  const Point ae = e_point - a;

  // In-plane rejection of AE from the chord: its length is the distance
  // from E to line AB, its direction the normal toward E. O' is the ball
  // center displaced by that rejection. Rejections at rounding-noise
  // scale snap to the exact on-chord case (d = 0, O' = center, beta = 0).
  const Point rej = ae - dot(ae, u_ab) * u_ab;
  double d = norm(rej);
  double beta;
  if (d <= 1e-12 * radius) {
    d = 0.0;
    beta = 0.0;
  } else {
    beta = angle_between(c.geometry.center + rej - a, ab);
  }

  const double d1 = distance(e_point, a);
  const double d2 = distance(e_point, b);
  const double alpha = d1 == 0.0 ? 0.0 : angle_between(ae, ab);

  const bool first_branch =
      c.curvature == CurvatureClass::Concave ? d1 >= d2 : d1 < d2;

  double raw;
  if (first_branch) {
    raw = 2.0 - d / (2.0 * radius) - (kPi / 2.0 - alpha) / (kPi - 2.0 * beta);
  } else {
    // beta == 0 puts E on the chord; the angular term is defined as 0.
    const double ratio = beta == 0.0 ? 0.0 : (beta - alpha) / (2.0 * beta);
    raw = 1.5 - d / (2.0 * radius) + ratio;
  }
  return Grade{clamp(raw, 1.0, 2.0), RegionLabel::Region2, raw, false};
}

std::vector<Grade> score_region3(const std::vector<Point>& unclustered,
                                 const ReferenceSet& ref) {
  if (ref.size() == 0) throw DomainError("score_region3: empty reference set");
  std::vector<double> min_dist;
  min_dist.reserve(unclustered.size());
  for (const Point& p : unclustered) {
    double m = std::numeric_limits<double>::infinity();
    for (const Point& q : ref.points()) m = std::min(m, distance(p, q));
    min_dist.push_back(m);
  }

  std::vector<Grade> grades;
  grades.reserve(unclustered.size());
  if (unclustered.empty()) return grades;

  const auto [lo_it, hi_it] = std::minmax_element(min_dist.begin(), min_dist.end());
  const double lo = *lo_it, hi = *hi_it;
  for (double m : min_dist) {
    // Closer to the front normalizes to a higher grade; a degenerate
    // spread (including a single solution) is neutral.
    const double raw = hi > lo ? 1.0 - (m - lo) / (hi - lo) : 0.5;
    grades.push_back(Grade{clamp(raw, 0.0, 1.0), RegionLabel::Region3, raw, false});
  }
  return grades;
}

GradedPopulation grade_population(const std::vector<Point>& pop,
                                  const Partition& part,
                                  const ReferenceSet& ref) {
  for (const Point& p : pop)
    if (p.dim != ref.dim())
      throw DomainError("grade_population: population/reference dimension mismatch");

  GradedPopulation out;
  out.entries.resize(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) out.entries[i].solution = pop[i];

  for (std::size_t ci = 0; ci < part.clusters.size(); ++ci) {
    const Cluster& c = part.clusters[ci];
    for (std::size_t mi : c.members) {
      const Point& p = pop[mi];
      Grade g;
      if (ref.dim() == 3) {
        // The optimal band needs derivatives, so in 3D it is merged into
        // the suboptimal rule, applied in the plane spanned by the
        // anchors and the solution.
        g = score_region2(p, c);
      } else {
        switch (classify_region(p, c)) {
          case RegionLabel::OnFront:
            g = Grade{3.0, RegionLabel::OnFront, 3.0, false};
            break;
          case RegionLabel::Region1:
            g = c.curvature == CurvatureClass::Convex
                    ? score_region1_convex(p, c)
                    : score_region1_concave(p, c);
            break;
          default:
            g = score_region2(p, c);
            break;
        }
      }
      out.entries[mi].grade = g;
      out.entries[mi].cluster = ci;
    }
  }

  std::vector<Point> loose;
  loose.reserve(part.unclustered.size());
  for (std::size_t i : part.unclustered) loose.push_back(pop[i]);
  const std::vector<Grade> g3 = score_region3(loose, ref);
  for (std::size_t k = 0; k < part.unclustered.size(); ++k)
    out.entries[part.unclustered[k]].grade = g3[k];

  return out;
}

}  // namespace rmf
