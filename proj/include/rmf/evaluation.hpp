#pragma once

#include <vector>

#include "rmf/clustering.hpp"
#include "rmf/metrics.hpp"
#include "rmf/region_scoring.hpp"

namespace rmf {

struct EvaluationOutcome {
  Partition partition;
  GradedPopulation graded;
  EvaluationReport report;
};

/// Full pipeline: cluster, grade, aggregate. `windows`, when non-empty,
/// adds the per-window local report.
EvaluationOutcome evaluate(const std::vector<Point>& pop,
                           const ReferenceSet& ref,
                           const PairingScheme& pairing,
                           const std::vector<ObservationWindow>& windows = {});

}  // namespace rmf
