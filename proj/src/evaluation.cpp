#include "rmf/evaluation.hpp"

namespace rmf {

EvaluationOutcome evaluate(const std::vector<Point>& pop,
                           const ReferenceSet& ref,
                           const PairingScheme& pairing,
                           const std::vector<ObservationWindow>& windows) {
  EvaluationOutcome out;
  out.partition = build_clusters(pop, ref, pairing);
  out.graded = grade_population(pop, out.partition, ref);

  out.report.convergence = convergence(out.graded);
  out.report.diversity = diversity(out.graded, out.partition);
  for (const Cluster& c : out.partition.clusters) {
    double sum = 0.0;
    for (std::size_t i : c.members) sum += out.graded.entries[i].grade.value;
    out.report.cluster_means.push_back(
        c.members.empty() ? 0.0 : sum / static_cast<double>(c.members.size()));
  }
  for (const GradedEntry& e : out.graded.entries)
    ++out.report.region_histogram[static_cast<std::size_t>(e.grade.region)];
  if (!windows.empty())
    out.report.local_windows = local_report(out.graded, out.partition, windows);
  return out;
}

}  // namespace rmf
