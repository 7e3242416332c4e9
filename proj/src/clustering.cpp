#include "rmf/clustering.hpp"

#include <algorithm>
#include <string>

namespace rmf {

ClusterGeometry cluster_geometry(const Point& a, const Point& b) {
  if (a.dim != b.dim) throw DomainError("cluster_geometry: dimension mismatch");
  if (a == b) throw DomainError("cluster_geometry: degenerate pair (a == b)");
  ClusterGeometry g;
  g.anchor_a = a;
  g.anchor_b = b;
  g.center = 0.5 * (a + b);
  g.radius = distance(a, b) / 2.0;
  return g;
}

namespace {

Cluster make_cluster_2d(const ReferenceSet& ref, std::size_t ia, std::size_t ib,
                        std::size_t span_lo, std::size_t span_hi) {
  Cluster c;
  c.geometry = cluster_geometry(ref[ia], ref[ib]);
  c.anchor_a_index = ia;
  c.anchor_b_index = ib;
  c.span_lo = span_lo;
  c.span_hi = span_hi;
  for (std::size_t i = span_lo; i <= span_hi; ++i)
    c.local_curve.push_back(ref[i]);
  // Fewer than 3 curve points cannot carry curvature; the two-point
  // polyline is literally a straight chord.
  c.curvature = (span_hi - span_lo + 1 >= 3)
                    ? classify_curvature(ref, span_lo, span_hi)
                    : CurvatureClass::Linear;
  c.tangent_a = estimate_tangent(ref, ia);
  c.tangent_b = estimate_tangent(ref, ib);
  return c;
}

std::vector<Cluster> default_clusters(const ReferenceSet& ref) {
  if (ref.dim() == 3)
    throw DomainError("default stride-2 pairing needs an ordered 2D reference set; "
                      "3D requires an explicit pairing");
  const std::size_t n = ref.size();
  if (n < 3)
    throw DomainError("default pairing needs at least 3 reference points");

  std::vector<Cluster> clusters;
  for (std::size_t k = 0; k + 2 <= n - 1; k += 2) {
    std::size_t hi = k + 2;
    // Even-sized sets leave one trailing point; it joins the last
    // window's local curve so no front segment goes uncovered.
    if (hi + 2 > n - 1 && hi < n - 1) hi = n - 1;
    clusters.push_back(make_cluster_2d(ref, k, k + 2, k, hi));
  }
  return clusters;
}

std::vector<Cluster> explicit_clusters(
    const ReferenceSet& ref,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (pairs.empty()) throw DomainError("explicit pairing holds no pairs");
  std::vector<Cluster> clusters;
  for (const auto& [ia, ib] : pairs) {
    if (ia >= ref.size() || ib >= ref.size())
      throw DomainError("explicit pairing references an out-of-range index (" +
                        std::to_string(ia) + ", " + std::to_string(ib) + ")");
    if (ref.dim() == 2) {
      std::size_t lo = std::min(ia, ib);
      std::size_t hi = std::max(ia, ib);
      clusters.push_back(make_cluster_2d(ref, lo, hi, lo, hi));
    } else {
      Cluster c;
      c.geometry = cluster_geometry(ref[ia], ref[ib]);
      c.anchor_a_index = ia;
      c.anchor_b_index = ib;
      c.span_lo = std::min(ia, ib);
      c.span_hi = std::max(ia, ib);
      c.local_curve = {ref[ia], ref[ib]};
      c.curvature = CurvatureClass::Linear;
      clusters.push_back(std::move(c));
    }
  }
  return clusters;
}

}  // namespace

Partition build_clusters(const std::vector<Point>& pop, const ReferenceSet& ref,
                         const PairingScheme& pairing) {
  if (ref.size() == 0) throw DomainError("build_clusters: empty reference set");
  for (const Point& p : pop)
    if (p.dim != ref.dim())
      throw DomainError("build_clusters: population/reference dimension mismatch");

  Partition part;
  part.clusters = pairing.is_explicit() ? explicit_clusters(ref, pairing.pairs())
                                        : default_clusters(ref);

  for (std::size_t i = 0; i < pop.size(); ++i) {
    bool assigned = false;
    for (Cluster& c : part.clusters) {
      if (c.contains(pop[i])) {
        c.members.push_back(i);
        assigned = true;
        break;  // first containing cluster wins
      }
    }
    if (!assigned) part.unclustered.push_back(i);
  }
  return part;
}

}  // namespace rmf
