#include "rmf/rmf.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rmf/errors.hpp"
#include "rmf/evaluation.hpp"
#include "rmf/fronts_io.hpp"

struct rmf_population {
  std::vector<rmf::Point> points;
};

struct rmf_reference_set {
  rmf::ReferenceSet set;
};

struct rmf_evaluation {
  rmf::EvaluationOutcome outcome;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

rmf_status fail(rmf_status code, const std::string& msg) {
  set_error(msg);
  return code;
}

template <typename Fn>
rmf_status wrap(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const rmf::ParseError& e) {
    return fail(RMF_ERROR_PARSE, e.what());
  } catch (const rmf::IoError& e) {
    return fail(RMF_ERROR_IO, e.what());
  } catch (const rmf::DomainError& e) {
    return fail(RMF_ERROR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(RMF_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(RMF_ERROR_INTERNAL, "unknown error");
  }
}

std::vector<rmf::Point> points_from_flat(const double* coords, size_t count,
                                         int dim) {
  std::vector<rmf::Point> pts;
  pts.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const double* row = coords + i * static_cast<size_t>(dim);
    pts.push_back(dim == 2 ? rmf::Point(row[0], row[1])
                           : rmf::Point(row[0], row[1], row[2]));
  }
  return pts;
}

rmf::Point point_from_flat(const double* coords, int dim) {
  return dim == 2 ? rmf::Point(coords[0], coords[1])
                  : rmf::Point(coords[0], coords[1], coords[2]);
}

}  // namespace

extern "C" {

const char* rmf_version(void) { return "0.1.0"; }

const char* rmf_last_error(void) { return g_last_error.c_str(); }

/* ---- populations ---- */

rmf_status rmf_population_create(const double* coords, size_t count, int dim,
                                 rmf_population** out) {
  if (!out || (count > 0 && !coords))
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_population_create: null argument");
  if (dim != 2 && dim != 3)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_population_create: dim must be 2 or 3");
  return wrap([&] {
    for (size_t i = 0; i < count * static_cast<size_t>(dim); ++i)
      if (!std::isfinite(coords[i]))
        throw rmf::DomainError("population contains a non-finite value");
    *out = new rmf_population{points_from_flat(coords, count, dim)};
    return RMF_OK;
  });
}

rmf_status rmf_population_load_csv(const char* path, rmf_population** out) {
  if (!path || !out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_population_load_csv: null argument");
  return wrap([&] {
    *out = new rmf_population{rmf::load_population_csv(path)};
    return RMF_OK;
  });
}

void rmf_population_destroy(rmf_population* pop) { delete pop; }

size_t rmf_population_size(const rmf_population* pop) {
  return pop ? pop->points.size() : 0;
}

int rmf_population_dim(const rmf_population* pop) {
  return pop && !pop->points.empty() ? pop->points.front().dim : 0;
}

rmf_status rmf_population_point(const rmf_population* pop, size_t index,
                                double* coords_out) {
  if (!pop || !coords_out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_population_point: null argument");
  if (index >= pop->points.size())
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_population_point: index out of range");
  const rmf::Point& p = pop->points[index];
  for (int i = 0; i < p.dim; ++i) coords_out[i] = p[static_cast<size_t>(i)];
  return RMF_OK;
}

/* ---- reference sets ---- */

rmf_status rmf_reference_set_create(const double* coords, size_t count, int dim,
                                    rmf_reference_set** out) {
  if (!out || !coords)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_create: null argument");
  if (dim != 2 && dim != 3)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_create: dim must be 2 or 3");
  return wrap([&] {
    *out = new rmf_reference_set{
        rmf::ReferenceSet::canonical(points_from_flat(coords, count, dim))};
    return RMF_OK;
  });
}

rmf_status rmf_reference_set_load_csv(const char* path, rmf_reference_set** out) {
  if (!path || !out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_load_csv: null argument");
  return wrap([&] {
    *out = new rmf_reference_set{rmf::load_reference_csv(path)};
    return RMF_OK;
  });
}

rmf_status rmf_reference_set_generate(rmf_front_shape shape, size_t n_points,
                                      double f1_lo, double f1_hi,
                                      rmf_reference_set** out) {
  if (!out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_generate: null argument");
  if (shape != RMF_FRONT_CONVEX_SQRT && shape != RMF_FRONT_CONCAVE_QUAD &&
      shape != RMF_FRONT_LINEAR)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_generate: bad shape");
  return wrap([&] {
    rmf::FrontSpec spec;
    spec.shape = shape == RMF_FRONT_CONVEX_SQRT   ? rmf::FrontShape::ConvexSqrt
                 : shape == RMF_FRONT_CONCAVE_QUAD ? rmf::FrontShape::ConcaveQuad
                                                    : rmf::FrontShape::Linear;
    spec.n_points = n_points;
    spec.f1_lo = f1_lo;
    spec.f1_hi = f1_hi;
    *out = new rmf_reference_set{rmf::generate_front(spec)};
    return RMF_OK;
  });
}

rmf_status rmf_reference_set_save_csv(const rmf_reference_set* ref,
                                      const char* path) {
  if (!ref || !path)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_save_csv: null argument");
  return wrap([&] {
    rmf::save_points_csv(ref->set.points(), path);
    return RMF_OK;
  });
}

void rmf_reference_set_destroy(rmf_reference_set* ref) { delete ref; }

size_t rmf_reference_set_size(const rmf_reference_set* ref) {
  return ref ? ref->set.size() : 0;
}

int rmf_reference_set_dim(const rmf_reference_set* ref) {
  return ref ? ref->set.dim() : 0;
}

rmf_status rmf_reference_set_point(const rmf_reference_set* ref, size_t index,
                                   double* coords_out) {
  if (!ref || !coords_out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_point: null argument");
  if (index >= ref->set.size())
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_point: index out of range");
  const rmf::Point& p = ref->set[index];
  for (int i = 0; i < p.dim; ++i) coords_out[i] = p[static_cast<size_t>(i)];
  return RMF_OK;
}

rmf_status rmf_reference_set_min_distance(const rmf_reference_set* ref,
                                          const double* coords, int dim,
                                          double* out) {
  if (!ref || !coords || !out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_reference_set_min_distance: null argument");
  if (dim != ref->set.dim())
    return fail(RMF_ERROR_DOMAIN, "rmf_reference_set_min_distance: dimension mismatch");
  const rmf::Point p = point_from_flat(coords, dim);
  double best = rmf::distance(p, ref->set[0]);
  for (size_t i = 1; i < ref->set.size(); ++i)
    best = std::min(best, rmf::distance(p, ref->set[i]));
  *out = best;
  return RMF_OK;
}

rmf_status rmf_load_pairs(const char* path, size_t* pairs_out, size_t* count_out) {
  if (!path || !count_out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_load_pairs: null argument");
  return wrap([&] {
    const auto pairs = rmf::load_pairing_file(path);
    if (pairs_out) {
      const size_t capacity = *count_out;
      for (size_t i = 0; i < pairs.size() && i < capacity; ++i) {
        pairs_out[2 * i] = pairs[i].first;
        pairs_out[2 * i + 1] = pairs[i].second;
      }
    }
    *count_out = pairs.size();
    return RMF_OK;
  });
}

/* ---- evaluation ---- */

rmf_status rmf_evaluate(const rmf_population* pop, const rmf_reference_set* ref,
                        const size_t* pairs, size_t n_pairs,
                        const double* window_bounds, size_t n_windows,
                        rmf_evaluation** out) {
  if (!pop || !ref || !out || (n_pairs > 0 && !pairs) ||
      (n_windows > 0 && !window_bounds))
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluate: null argument");
  return wrap([&] {
    rmf::PairingScheme scheme = rmf::PairingScheme::stride2();
    if (pairs && n_pairs > 0) {
      std::vector<std::pair<size_t, size_t>> ps;
      ps.reserve(n_pairs);
      for (size_t i = 0; i < n_pairs; ++i)
        ps.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
      scheme = rmf::PairingScheme::explicit_pairs(std::move(ps));
    }
    std::vector<rmf::ObservationWindow> windows;
    for (size_t i = 0; i < n_windows; ++i)
      windows.push_back({rmf::Point(window_bounds[2 * i], 0.0),
                         rmf::Point(window_bounds[2 * i + 1], 0.0)});
    *out = new rmf_evaluation{
        rmf::evaluate(pop->points, ref->set, scheme, windows)};
    return RMF_OK;
  });
}

void rmf_evaluation_destroy(rmf_evaluation* eval) { delete eval; }

double rmf_evaluation_convergence(const rmf_evaluation* eval) {
  return eval ? eval->outcome.report.convergence : 0.0;
}

double rmf_evaluation_diversity(const rmf_evaluation* eval) {
  return eval ? eval->outcome.report.diversity : 0.0;
}

size_t rmf_evaluation_solution_count(const rmf_evaluation* eval) {
  return eval ? eval->outcome.graded.entries.size() : 0;
}

size_t rmf_evaluation_cluster_count(const rmf_evaluation* eval) {
  return eval ? eval->outcome.partition.clusters.size() : 0;
}

rmf_status rmf_evaluation_solution(const rmf_evaluation* eval, size_t index,
                                   double* grade_out, double* raw_grade_out,
                                   rmf_region* region_out, int64_t* cluster_out) {
  if (!eval)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_solution: null handle");
  if (index >= eval->outcome.graded.entries.size())
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_solution: index out of range");
  const rmf::GradedEntry& e = eval->outcome.graded.entries[index];
  if (grade_out) *grade_out = e.grade.value;
  if (raw_grade_out) *raw_grade_out = e.grade.raw;
  if (region_out) *region_out = static_cast<rmf_region>(e.grade.region);
  if (cluster_out)
    *cluster_out = e.cluster ? static_cast<int64_t>(*e.cluster) : int64_t{-1};
  return RMF_OK;
}

rmf_status rmf_evaluation_cluster(const rmf_evaluation* eval, size_t index,
                                  size_t* member_count_out, double* mean_grade_out) {
  if (!eval)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_cluster: null handle");
  if (index >= eval->outcome.partition.clusters.size())
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_cluster: index out of range");
  if (member_count_out)
    *member_count_out = eval->outcome.partition.clusters[index].members.size();
  if (mean_grade_out) *mean_grade_out = eval->outcome.report.cluster_means[index];
  return RMF_OK;
}

rmf_status rmf_evaluation_region_counts(const rmf_evaluation* eval,
                                        size_t* counts_out) {
  if (!eval || !counts_out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_region_counts: null argument");
  for (size_t i = 0; i < 4; ++i)
    counts_out[i] = eval->outcome.report.region_histogram[i];
  return RMF_OK;
}

size_t rmf_evaluation_window_count(const rmf_evaluation* eval) {
  return eval ? eval->outcome.report.local_windows.size() : 0;
}

rmf_status rmf_evaluation_window(const rmf_evaluation* eval, size_t index,
                                 rmf_window_stat* out) {
  if (!eval || !out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_window: null argument");
  if (index >= eval->outcome.report.local_windows.size())
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_window: index out of range");
  const rmf::WindowStat& w = eval->outcome.report.local_windows[index];
  out->start_f1 = w.start_f1;
  out->end_f1 = w.end_f1;
  out->is_catch_all = w.catch_all ? 1 : 0;
  out->cluster_count = w.cluster_count;
  out->convergence = w.convergence;
  out->has_diversity = w.diversity ? 1 : 0;
  out->diversity = w.diversity ? *w.diversity : 0.0;
  return RMF_OK;
}

rmf_status rmf_evaluation_save_report(const rmf_evaluation* eval, const char* path) {
  if (!eval || !path)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_evaluation_save_report: null argument");
  return wrap([&] {
    rmf::save_report(eval->outcome.report, eval->outcome.graded, path);
    return RMF_OK;
  });
}

/* ---- baseline metric and comparison ---- */

rmf_status rmf_igd(const rmf_population* pop, const rmf_reference_set* ref,
                   double* out) {
  if (!pop || !ref || !out)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_igd: null argument");
  return wrap([&] {
    *out = rmf::igd(pop->points, ref->set);
    return RMF_OK;
  });
}

rmf_status rmf_combined_score(const double* convergence, const double* diversity,
                              size_t n, double alpha, double beta, double* s1_out,
                              double* s2_out, double* score_out,
                              size_t* ranking_out) {
  if (!convergence || !diversity)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_combined_score: null argument");
  return wrap([&] {
    std::vector<rmf::AlgorithmInput> inputs;
    inputs.reserve(n);
    for (size_t i = 0; i < n; ++i)
      inputs.push_back({std::to_string(i), convergence[i], diversity[i]});
    const rmf::ComparisonResult cmp = rmf::combined_score(inputs, alpha, beta);
    for (size_t rank = 0; rank < cmp.ranking.size(); ++rank) {
      const size_t input_index = std::stoul(cmp.ranking[rank].name);
      if (s1_out) s1_out[input_index] = cmp.ranking[rank].s1;
      if (s2_out) s2_out[input_index] = cmp.ranking[rank].s2;
      if (score_out) score_out[input_index] = cmp.ranking[rank].score;
      if (ranking_out) ranking_out[rank] = input_index;
    }
    return RMF_OK;
  });
}

rmf_status rmf_save_comparison(const char* const* names, const double* convergence,
                               const double* diversity, size_t n, double alpha,
                               double beta, const char* path) {
  if (!names || !convergence || !diversity || !path)
    return fail(RMF_ERROR_INVALID_ARGUMENT, "rmf_save_comparison: null argument");
  return wrap([&] {
    std::vector<rmf::AlgorithmInput> inputs;
    inputs.reserve(n);
    for (size_t i = 0; i < n; ++i)
      inputs.push_back({names[i] ? names[i] : "", convergence[i], diversity[i]});
    rmf::save_comparison(rmf::combined_score(inputs, alpha, beta), path);
    return RMF_OK;
  });
}

} /* extern "C" */
