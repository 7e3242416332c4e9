#include "rmf/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace rmf {

Point operator+(const Point& a, const Point& b) {
  assert(a.dim == b.dim);
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r.v[i] += b.v[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  assert(a.dim == b.dim);
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r.v[i] -= b.v[i];
  return r;
}

Point operator*(double s, const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r.v[i] *= s;
  return r;
}

double dot(const Point& a, const Point& b) {
  assert(a.dim == b.dim);
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a.v[i] * b.v[i];
  return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

double distance(const Point& a, const Point& b) { return norm(a - b); }

bool is_finite(const Point& p) {
  for (int i = 0; i < p.dim; ++i)
    if (!std::isfinite(p.v[i])) return false;
  return true;
}

Point normalized(const Point& a) {
  double n = norm(a);
  if (n == 0.0) throw DomainError("cannot normalize a zero-length vector");
  return (1.0 / n) * a;
}

const char* to_string(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::Convex: return "convex";
    case CurvatureClass::Concave: return "concave";
    case CurvatureClass::Linear: return "linear";
  }
  return "?";
}

ReferenceSet ReferenceSet::canonical(std::vector<Point> points) {
  if (points.empty()) throw DomainError("reference set must not be empty");
  const int d = points.front().dim;
  if (d != 2 && d != 3)
    throw DomainError("reference set dimension must be 2 or 3");
  for (const Point& p : points) {
    if (p.dim != d) throw DomainError("reference set mixes dimensions");
    if (!is_finite(p)) throw DomainError("reference set contains a non-finite point");
  }
  if (d == 2) {
    std::stable_sort(points.begin(), points.end(),
                     [](const Point& a, const Point& b) { return a.f1() < b.f1(); });
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (!(points[i - 1].f1() < points[i].f1()))
        throw DomainError(
            "2D reference set must be strictly increasing in f1 "
            "(duplicate or tied first objective)");
    }
  } else {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw DomainError("reference set contains duplicate points");
  }
  ReferenceSet r;
  r.points_ = std::move(points);
  return r;
}

namespace {

// Magnitude of the cross product; the z component alone in 2D.
double cross_norm(const Point& u, const Point& v) {
  if (u.dim == 2) return std::abs(u.f1() * v.f2() - u.f2() * v.f1());
  const double cx = u.v[1] * v.v[2] - u.v[2] * v.v[1];
  const double cy = u.v[2] * v.v[0] - u.v[0] * v.v[2];
  const double cz = u.v[0] * v.v[1] - u.v[1] * v.v[0];
  return std::sqrt(cx * cx + cy * cy + cz * cz);
}

}  // namespace

double angle_between(const Point& u, const Point& v) {
  if (u.dim != v.dim) throw DomainError("angle_between: dimension mismatch");
  if (norm(u) == 0.0 || norm(v) == 0.0)
    throw DomainError("angle_between: zero-length direction");
  return std::atan2(cross_norm(u, v), dot(u, v));
}

Point estimate_tangent(const ReferenceSet& ref, std::size_t i) {
  if (ref.dim() != 2) throw DomainError("estimate_tangent requires a 2D reference set");
  if (ref.size() < 2) throw DomainError("estimate_tangent needs at least 2 points");
  if (i >= ref.size()) throw DomainError("estimate_tangent: index out of range");

  Point d;
  if (i == 0)
    d = ref[1] - ref[0];
  else if (i + 1 == ref.size())
    d = ref[i] - ref[i - 1];
  else
    d = ref[i + 1] - ref[i - 1];

  Point u = normalized(d);
  if (u.f1() < 0.0) u = -1.0 * u;  // orient toward increasing f1
  return u;
}

CurvatureClass classify_curvature(const ReferenceSet& ref, std::size_t span_lo,
                                  std::size_t span_hi) {
  if (ref.dim() != 2) throw DomainError("classify_curvature requires a 2D reference set");
  if (span_hi >= ref.size() || span_lo > span_hi)
    throw DomainError("classify_curvature: bad span");
  const std::size_t n = span_hi - span_lo + 1;
  if (n < 3) throw DomainError("classify_curvature needs at least 3 points");

  double f2_min = ref[span_lo].f2();
  double f2_max = f2_min;
  for (std::size_t i = span_lo; i <= span_hi; ++i) {
    f2_min = std::min(f2_min, ref[i].f2());
    f2_max = std::max(f2_max, ref[i].f2());
  }
  const double eps = kCurvatureEpsilonRel * (f2_max - f2_min);

  // Mean second divided difference of f2 over f1.
  double sum = 0.0;
  for (std::size_t i = span_lo + 1; i < span_hi; ++i) {
    const Point& a = ref[i - 1];
    const Point& b = ref[i];
    const Point& c = ref[i + 1];
    const double s1 = (b.f2() - a.f2()) / (b.f1() - a.f1());
    const double s2 = (c.f2() - b.f2()) / (c.f1() - b.f1());
    sum += (s2 - s1) / (c.f1() - a.f1());
  }
  const double mean = sum / static_cast<double>(n - 2);

  if (mean > eps) return CurvatureClass::Convex;
  if (mean < -eps) return CurvatureClass::Concave;
  return CurvatureClass::Linear;
}

}  // namespace rmf
