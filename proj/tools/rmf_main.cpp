// Command-line front end for the regionalized metric framework. Talks to
// the core exclusively through the C API in rmf/rmf.h.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rmf/rmf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

[[nodiscard]] int fail_input(const std::string& context) {
  std::fprintf(stderr, "rmf: %s: %s\n", context.c_str(), rmf_last_error());
  return kExitUsage;
}

struct PopulationDeleter {
  void operator()(rmf_population* p) const { rmf_population_destroy(p); }
};
struct ReferenceDeleter {
  void operator()(rmf_reference_set* r) const { rmf_reference_set_destroy(r); }
};
struct EvaluationDeleter {
  void operator()(rmf_evaluation* e) const { rmf_evaluation_destroy(e); }
};

using PopulationPtr = std::unique_ptr<rmf_population, PopulationDeleter>;
using ReferencePtr = std::unique_ptr<rmf_reference_set, ReferenceDeleter>;
using EvaluationPtr = std::unique_ptr<rmf_evaluation, EvaluationDeleter>;

PopulationPtr load_population(const std::string& path, int& status) {
  rmf_population* pop = nullptr;
  status = rmf_population_load_csv(path.c_str(), &pop) == RMF_OK
               ? kExitOk
               : fail_input(path);
  return PopulationPtr(pop);
}

ReferencePtr load_reference(const std::string& path, int& status) {
  rmf_reference_set* ref = nullptr;
  status = rmf_reference_set_load_csv(path.c_str(), &ref) == RMF_OK
               ? kExitOk
               : fail_input(path);
  return ReferencePtr(ref);
}

// --pairs accepts "stride2" or "file:PATH".
bool load_pairs_option(const std::string& spec, std::vector<size_t>& pairs,
                       int& status) {
  status = kExitOk;
  if (spec == "stride2") return true;
  if (spec.rfind("file:", 0) != 0) {
    std::fprintf(stderr, "rmf: --pairs expects 'stride2' or 'file:PATH', got '%s'\n",
                 spec.c_str());
    status = kExitUsage;
    return false;
  }
  const std::string path = spec.substr(5);
  size_t count = 0;
  if (rmf_load_pairs(path.c_str(), nullptr, &count) != RMF_OK) {
    status = fail_input(path);
    return false;
  }
  pairs.resize(2 * count);
  if (rmf_load_pairs(path.c_str(), pairs.data(), &count) != RMF_OK) {
    status = fail_input(path);
    return false;
  }
  return true;
}

// Windows file: one "start_f1,end_f1" line per window.
bool load_windows_file(const std::string& path, std::vector<double>& bounds,
                       int& status) {
  status = kExitOk;
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "rmf: cannot open %s\n", path.c_str());
    status = kExitUsage;
    return false;
  }
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream iss(line);
    double start = 0.0, end = 0.0;
    std::string extra;
    if (!(iss >> start >> end) || (iss >> extra) || !std::isfinite(start) ||
        !std::isfinite(end)) {
      std::fprintf(stderr, "rmf: %s: line %zu: expected 'start_f1,end_f1'\n",
                   path.c_str(), lineno);
      status = kExitUsage;
      return false;
    }
    bounds.push_back(start);
    bounds.push_back(end);
  }
  if (bounds.empty()) {
    std::fprintf(stderr, "rmf: %s: no windows\n", path.c_str());
    status = kExitUsage;
    return false;
  }
  return true;
}

bool check_dim(int expected, int actual, const std::string& what, int& status) {
  status = kExitOk;
  if (expected != 0 && actual != 0 && expected != actual) {
    std::fprintf(stderr, "rmf: %s has dimension %d, --dim says %d\n", what.c_str(),
                 actual, expected);
    status = kExitUsage;
    return false;
  }
  return true;
}

struct EvaluateArgs {
  std::vector<std::string> pop_paths;
  std::string ref_path;
  std::string pairs_spec = "stride2";
  int dim = 0;  // 0 = take from the files
  double alpha = 0.5;
  double beta = 0.5;
  std::string windows_path;
  std::string out_path;
};

int run_evaluate(const EvaluateArgs& args) {
  int status = kExitOk;
  const ReferencePtr ref = load_reference(args.ref_path, status);
  if (status != kExitOk) return status;
  const PopulationPtr pop = load_population(args.pop_paths.front(), status);
  if (status != kExitOk) return status;
  if (!check_dim(args.dim, rmf_reference_set_dim(ref.get()), args.ref_path, status) ||
      !check_dim(args.dim, rmf_population_dim(pop.get()), args.pop_paths.front(),
                 status))
    return status;

  std::vector<size_t> pairs;
  if (!load_pairs_option(args.pairs_spec, pairs, status)) return status;
  std::vector<double> windows;
  if (!args.windows_path.empty() &&
      !load_windows_file(args.windows_path, windows, status))
    return status;

  rmf_evaluation* raw = nullptr;
  if (rmf_evaluate(pop.get(), ref.get(), pairs.empty() ? nullptr : pairs.data(),
                   pairs.size() / 2, windows.empty() ? nullptr : windows.data(),
                   windows.size() / 2, &raw) != RMF_OK)
    return fail_input(args.pop_paths.front());
  const EvaluationPtr eval(raw);

  std::printf("convergence %.4f\n", rmf_evaluation_convergence(eval.get()));
  std::printf("diversity %.4f\n", rmf_evaluation_diversity(eval.get()));

  for (size_t wi = 0; wi < rmf_evaluation_window_count(eval.get()); ++wi) {
    rmf_window_stat w{};
    rmf_evaluation_window(eval.get(), wi, &w);
    if (w.is_catch_all)
      std::printf("window catch-all clusters %zu convergence %.4f", w.cluster_count,
                  w.convergence);
    else
      std::printf("window [%g, %g] clusters %zu convergence %.4f", w.start_f1,
                  w.end_f1, w.cluster_count, w.convergence);
    if (w.has_diversity)
      std::printf(" diversity %.4f\n", w.diversity);
    else
      std::printf(" diversity n/a\n");
  }

  if (!args.out_path.empty() &&
      rmf_evaluation_save_report(eval.get(), args.out_path.c_str()) != RMF_OK)
    return fail_input(args.out_path);
  return kExitOk;
}

int run_compare(const EvaluateArgs& args) {
  int status = kExitOk;
  const ReferencePtr ref = load_reference(args.ref_path, status);
  if (status != kExitOk) return status;
  std::vector<size_t> pairs;
  if (!load_pairs_option(args.pairs_spec, pairs, status)) return status;
  if (args.alpha < 0.0 || args.beta < 0.0 || args.alpha + args.beta <= 0.0) {
    std::fprintf(stderr, "rmf: weights must be non-negative with alpha + beta > 0\n");
    return kExitUsage;
  }

  std::vector<double> convergence, diversity;
  for (const std::string& path : args.pop_paths) {
    const PopulationPtr pop = load_population(path, status);
    if (status != kExitOk) return status;
    rmf_evaluation* raw = nullptr;
    if (rmf_evaluate(pop.get(), ref.get(), pairs.empty() ? nullptr : pairs.data(),
                     pairs.size() / 2, nullptr, 0, &raw) != RMF_OK)
      return fail_input(path);
    const EvaluationPtr eval(raw);
    convergence.push_back(rmf_evaluation_convergence(eval.get()));
    diversity.push_back(rmf_evaluation_diversity(eval.get()));
  }

  const size_t n = args.pop_paths.size();
  std::vector<double> s1(n), s2(n), score(n);
  std::vector<size_t> ranking(n);
  if (rmf_combined_score(convergence.data(), diversity.data(), n, args.alpha,
                         args.beta, s1.data(), s2.data(), score.data(),
                         ranking.data()) != RMF_OK)
    return fail_input("compare");

  std::printf("%-4s %-32s %12s %12s %8s %8s %8s\n", "rank", "name", "convergence",
              "diversity", "S1", "S2", "score");
  for (size_t r = 0; r < n; ++r) {
    const size_t i = ranking[r];
    std::printf("%-4zu %-32s %12.4f %12.4f %8.4f %8.4f %8.4f\n", r + 1,
                args.pop_paths[i].c_str(), convergence[i], diversity[i], s1[i],
                s2[i], score[i]);
  }

  if (!args.out_path.empty()) {
    std::vector<const char*> names;
    names.reserve(n);
    for (const std::string& p : args.pop_paths) names.push_back(p.c_str());
    if (rmf_save_comparison(names.data(), convergence.data(), diversity.data(), n,
                            args.alpha, args.beta, args.out_path.c_str()) != RMF_OK)
      return fail_input(args.out_path);
  }
  return kExitOk;
}

// Six probes at the same minimum distance from the reference set, swept
// from hugging the front to standing off it. The probes sit on a circle
// around one reference point with a radius below half the gap to its
// neighbors, so the nearest reference point (and hence the distance the
// baseline metric sees) is the same for all of them by construction.
int run_case_study(const std::string& out_path) {
  rmf_reference_set* raw_ref = nullptr;
  if (rmf_reference_set_generate(RMF_FRONT_CONVEX_SQRT, 101, 0.0, 1.0, &raw_ref) !=
      RMF_OK)
    return fail_input("case-study front");
  const ReferencePtr ref(raw_ref);
  const size_t n_ref = rmf_reference_set_size(ref.get());

  const size_t qi = 3;  // anchor the probes near the front's steep left end
  double q[2], prev[2], next[2];
  rmf_reference_set_point(ref.get(), qi, q);
  rmf_reference_set_point(ref.get(), qi - 1, prev);
  rmf_reference_set_point(ref.get(), qi + 1, next);

  // Central-difference tangent at q, and the normal on the dominated side.
  double tx = next[0] - prev[0], ty = next[1] - prev[1];
  const double tn = std::sqrt(tx * tx + ty * ty);
  tx /= tn;
  ty /= tn;
  double nx = -ty, ny = tx;
  if (ny < 0.0) {
    nx = -nx;
    ny = -ny;
  }

  double gap = 0.0;
  for (size_t i = 0; i < n_ref; ++i) {
    if (i == qi) continue;
    double p[2];
    rmf_reference_set_point(ref.get(), i, p);
    const double d = std::hypot(p[0] - q[0], p[1] - q[1]);
    if (gap == 0.0 || d < gap) gap = d;
  }
  const double radius = 0.4 * gap;

  const double sweep[6] = {0.040, 0.052, 0.064, 0.50, 1.00, 1.50};
  double coords[12];
  for (int k = 0; k < 6; ++k) {
    const double c = std::cos(sweep[k]), s = std::sin(sweep[k]);
    coords[2 * k] = q[0] + radius * (c * tx + s * nx);
    coords[2 * k + 1] = q[1] + radius * (c * ty + s * ny);
  }

  rmf_population* raw_pop = nullptr;
  if (rmf_population_create(coords, 6, 2, &raw_pop) != RMF_OK)
    return fail_input("case-study probes");
  const PopulationPtr pop(raw_pop);

  rmf_evaluation* raw_eval = nullptr;
  if (rmf_evaluate(pop.get(), ref.get(), nullptr, 0, nullptr, 0, &raw_eval) != RMF_OK)
    return fail_input("case-study evaluation");
  const EvaluationPtr eval(raw_eval);

  double igd_part[6], grade[6];
  rmf_region region[6];
  std::printf("%-5s %10s %10s %16s %8s %10s\n", "probe", "f1", "f2", "igd", "grade",
              "region");
  for (size_t k = 0; k < 6; ++k) {
    if (rmf_reference_set_min_distance(ref.get(), coords + 2 * k, 2, &igd_part[k]) !=
        RMF_OK)
      return fail_input("case-study distance");
    rmf_evaluation_solution(eval.get(), k, &grade[k], nullptr, &region[k], nullptr);
    const char* label = region[k] == RMF_REGION_ON_FRONT ? "on_front"
                        : region[k] == RMF_REGION_1      ? "region1"
                        : region[k] == RMF_REGION_2      ? "region2"
                                                         : "region3";
    std::printf("%-5zu %10.4f %10.4f %16.12f %8.4f %10s\n", k + 1, coords[2 * k],
                coords[2 * k + 1], igd_part[k], grade[k], label);
  }

  for (int k = 1; k < 6; ++k) {
    if (std::fabs(igd_part[k] - igd_part[0]) > 1e-9) {
      std::fprintf(stderr,
                   "assertion failed: probe %d distance %.12f differs from probe 1 "
                   "distance %.12f\n",
                   k + 1, igd_part[k], igd_part[0]);
      return kExitAssertion;
    }
  }
  for (int k = 1; k < 6; ++k) {
    if (!(grade[k] < grade[k - 1])) {
      std::fprintf(stderr,
                   "assertion failed: grades not strictly decreasing at probe %d "
                   "(%.6f -> %.6f)\n",
                   k + 1, grade[k - 1], grade[k]);
      return kExitAssertion;
    }
  }
  if (!(grade[0] >= 2.0 && grade[0] <= 3.0)) {
    std::fprintf(stderr, "assertion failed: first probe grade %.6f outside [2, 3]\n",
                 grade[0]);
    return kExitAssertion;
  }
  if (!(grade[5] >= 1.0 && grade[5] < 2.0)) {
    std::fprintf(stderr, "assertion failed: last probe grade %.6f outside [1, 2)\n",
                 grade[5]);
    return kExitAssertion;
  }

  if (!out_path.empty() &&
      rmf_evaluation_save_report(eval.get(), out_path.c_str()) != RMF_OK)
    return fail_input(out_path);
  return kExitOk;
}

struct GenFrontArgs {
  std::string shape = "convex-sqrt";
  size_t n_points = 101;
  double lo = 0.0;
  double hi = 1.0;
  std::string out_path;
};

int run_gen_front(const GenFrontArgs& args) {
  rmf_front_shape shape;
  if (args.shape == "convex-sqrt")
    shape = RMF_FRONT_CONVEX_SQRT;
  else if (args.shape == "concave-quad")
    shape = RMF_FRONT_CONCAVE_QUAD;
  else if (args.shape == "linear")
    shape = RMF_FRONT_LINEAR;
  else {
    std::fprintf(stderr, "rmf: unknown shape '%s'\n", args.shape.c_str());
    return kExitUsage;
  }
  rmf_reference_set* raw = nullptr;
  if (rmf_reference_set_generate(shape, args.n_points, args.lo, args.hi, &raw) !=
      RMF_OK)
    return fail_input("gen-front");
  const ReferencePtr ref(raw);
  if (rmf_reference_set_save_csv(ref.get(), args.out_path.c_str()) != RMF_OK)
    return fail_input(args.out_path);
  return kExitOk;
}

int run_igd(const std::string& pop_path, const std::string& ref_path, int dim) {
  int status = kExitOk;
  const ReferencePtr ref = load_reference(ref_path, status);
  if (status != kExitOk) return status;
  const PopulationPtr pop = load_population(pop_path, status);
  if (status != kExitOk) return status;
  if (!check_dim(dim, rmf_reference_set_dim(ref.get()), ref_path, status) ||
      !check_dim(dim, rmf_population_dim(pop.get()), pop_path, status))
    return status;
  double value = 0.0;
  if (rmf_igd(pop.get(), ref.get(), &value) != RMF_OK) return fail_input(pop_path);
  std::printf("%.6f\n", value);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Scores multimodal multi-objective solution sets against a reference "
      "Pareto front with region-partitioned grading, plus a baseline IGD.\n"
      "Note: convergence sums per-solution grades and therefore scales with "
      "population size; compare runs at equal population sizes."};
  app.require_subcommand(1);

  EvaluateArgs ev;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Cluster and grade one population against a reference front");
  evaluate->add_option("--pop", ev.pop_paths, "Population CSV")
      ->required()
      ->expected(1);
  evaluate->add_option("--ref", ev.ref_path, "Reference front CSV")->required();
  evaluate->add_option("--pairs", ev.pairs_spec, "stride2 | file:PATH");
  evaluate->add_option("--dim", ev.dim, "Expected objective dimension")
      ->check(CLI::IsMember({2, 3}));
  evaluate->add_option("--windows", ev.windows_path,
                       "Observation windows file (start_f1,end_f1 per line)");
  evaluate->add_option("--out", ev.out_path, "Report output path (JSON)");

  EvaluateArgs cp;
  CLI::App* compare = app.add_subcommand(
      "compare", "Rank several populations by combined convergence/diversity");
  compare->add_option("--pop", cp.pop_paths, "Population CSVs (two or more)")
      ->required()
      ->expected(2, -1);
  compare->add_option("--ref", cp.ref_path, "Reference front CSV")->required();
  compare->add_option("--pairs", cp.pairs_spec, "stride2 | file:PATH");
  compare->add_option("--alpha", cp.alpha, "Weight of normalized convergence");
  compare->add_option("--beta", cp.beta, "Weight of normalized diversity");
  compare->add_option("--out", cp.out_path, "Comparison output path (JSON)");

  std::string cs_out;
  CLI::App* case_study = app.add_subcommand(
      "case-study",
      "Grade six probes equidistant from the reference set; the baseline "
      "distance ties while the grades strictly decrease");
  case_study->add_option("--out", cs_out, "Report output path (JSON)");

  GenFrontArgs gf;
  CLI::App* gen_front =
      app.add_subcommand("gen-front", "Write a synthetic reference front CSV");
  gen_front->add_option("--shape", gf.shape, "convex-sqrt | concave-quad | linear");
  gen_front->add_option("--n", gf.n_points, "Number of points (>= 3)");
  gen_front->add_option("--lo", gf.lo, "First objective lower bound");
  gen_front->add_option("--hi", gf.hi, "First objective upper bound");
  gen_front->add_option("--out", gf.out_path, "Output CSV path")->required();

  std::string igd_pop, igd_ref;
  int igd_dim = 0;
  CLI::App* igd_cmd =
      app.add_subcommand("igd", "Baseline inverted generational distance");
  igd_cmd->add_option("--pop", igd_pop, "Population CSV")->required();
  igd_cmd->add_option("--ref", igd_ref, "Reference set CSV")->required();
  igd_cmd->add_option("--dim", igd_dim, "Expected dimension")
      ->check(CLI::IsMember({2, 3}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*evaluate) return run_evaluate(ev);
  if (*compare) return run_compare(cp);
  if (*case_study) return run_case_study(cs_out);
  if (*gen_front) return run_gen_front(gf);
  if (*igd_cmd) return run_igd(igd_pop, igd_ref, igd_dim);
  return kExitUsage;
}
