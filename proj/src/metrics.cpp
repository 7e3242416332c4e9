#include "rmf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rmf {

double convergence(const GradedPopulation& g) {
  double sum = 0.0;
  for (const GradedEntry& e : g.entries) sum += e.grade.value;
  return sum;
}

namespace {

double cluster_mean(const GradedPopulation& g, const Cluster& c) {
  if (c.members.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i : c.members) sum += g.entries[i].grade.value;
  return sum / static_cast<double>(c.members.size());
}

}  // namespace

double diversity(const GradedPopulation& g, const Partition& part, double k) {
  if (part.clusters.empty()) throw DomainError("diversity: no clusters");
  double sum = 0.0;
  for (const Cluster& c : part.clusters) {
    const double dev = cluster_mean(g, c) - k;
    sum += dev * dev;
  }
  return sum / static_cast<double>(part.clusters.size());
}

ComparisonResult combined_score(const std::vector<AlgorithmInput>& results,
                                double alpha, double beta) {
  if (results.empty()) throw DomainError("combined_score: no results");
  if (alpha < 0.0 || beta < 0.0)
    throw DomainError("combined_score: weights must be non-negative");

  double conv_lo = results.front().convergence, conv_hi = conv_lo;
  double div_lo = results.front().diversity, div_hi = div_lo;
  for (const AlgorithmInput& r : results) {
    conv_lo = std::min(conv_lo, r.convergence);
    conv_hi = std::max(conv_hi, r.convergence);
    div_lo = std::min(div_lo, r.diversity);
    div_hi = std::max(div_hi, r.diversity);
  }

  ComparisonResult out;
  out.alpha = alpha;
  out.beta = beta;
  for (const AlgorithmInput& r : results) {
    AlgorithmScore s;
    s.name = r.name;
    s.convergence = r.convergence;
    s.diversity = r.diversity;
    // Degenerate spans carry no information and map to neutral 0.5.
    s.s1 = conv_hi > conv_lo ? (r.convergence - conv_lo) / (conv_hi - conv_lo) : 0.5;
    s.s2 = div_hi > div_lo ? (div_hi - r.diversity) / (div_hi - div_lo) : 0.5;
    s.score = alpha * s.s1 + beta * s.s2;
    out.ranking.push_back(std::move(s));
  }
  std::stable_sort(out.ranking.begin(), out.ranking.end(),
                   [](const AlgorithmScore& a, const AlgorithmScore& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.s1 > b.s1;
                   });
  return out;
}

std::vector<WindowStat> local_report(const GradedPopulation& g,
                                     const Partition& part,
                                     const std::vector<ObservationWindow>& windows) {
  if (windows.empty()) throw DomainError("local_report: no windows");
  for (const ObservationWindow& w : windows)
    if (w.start.f1() > w.end.f1())
      throw DomainError("local_report: window start exceeds end");

  std::vector<std::vector<std::size_t>> matched(windows.size());
  std::vector<std::size_t> leftover;
  for (std::size_t ci = 0; ci < part.clusters.size(); ++ci) {
    const double x = part.clusters[ci].geometry.center.f1();
    bool hit = false;
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
      if (windows[wi].start.f1() <= x && x <= windows[wi].end.f1()) {
        matched[wi].push_back(ci);
        hit = true;
      }
    }
    if (!hit) leftover.push_back(ci);
  }

  auto stat_for = [&](const std::vector<std::size_t>& cluster_ids) {
    WindowStat s;
    s.cluster_count = cluster_ids.size();
    for (std::size_t ci : cluster_ids)
      for (std::size_t mi : part.clusters[ci].members)
        s.convergence += g.entries[mi].grade.value;
    if (!cluster_ids.empty()) {
      double sum = 0.0;
      for (std::size_t ci : cluster_ids) {
        const double dev = cluster_mean(g, part.clusters[ci]) - 3.0;
        sum += dev * dev;
      }
      s.diversity = sum / static_cast<double>(cluster_ids.size());
    }
    return s;
  };

  std::vector<WindowStat> out;
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    WindowStat s = stat_for(matched[wi]);
    s.start_f1 = windows[wi].start.f1();
    s.end_f1 = windows[wi].end.f1();
    out.push_back(std::move(s));
  }
  if (!leftover.empty()) {
    WindowStat s = stat_for(leftover);
    s.catch_all = true;
    s.start_f1 = std::numeric_limits<double>::quiet_NaN();
    s.end_f1 = std::numeric_limits<double>::quiet_NaN();
    out.push_back(std::move(s));
  }
  return out;
}

double igd(const std::vector<Point>& solutions, const ReferenceSet& reference) {
  if (solutions.empty()) throw DomainError("igd: empty solution set");
  if (reference.size() == 0) throw DomainError("igd: empty reference set");
  for (const Point& p : solutions)
    if (p.dim != reference.dim()) throw DomainError("igd: dimension mismatch");

  double sum = 0.0;
  for (const Point& x : reference.points()) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& y : solutions) best = std::min(best, distance(x, y));
    sum += best;
  }
  return sum / static_cast<double>(reference.size());
}

}  // namespace rmf
