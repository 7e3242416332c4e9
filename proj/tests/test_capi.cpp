// Exercises the shared-library surface only; no C++ core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmf/rmf.h"
#include "test_support.hpp"

namespace {

struct Handles {
  rmf_population* pop = nullptr;
  rmf_reference_set* ref = nullptr;
  rmf_evaluation* eval = nullptr;
  ~Handles() {
    rmf_evaluation_destroy(eval);
    rmf_reference_set_destroy(ref);
    rmf_population_destroy(pop);
  }
};

}  // namespace

TEST_CASE("version and argument validation") {
  CHECK(std::strlen(rmf_version()) > 0);

  rmf_population* pop = nullptr;
  CHECK(rmf_population_create(nullptr, 3, 2, &pop) == RMF_ERROR_INVALID_ARGUMENT);
  const double coords[4] = {0, 0, 1, 1};
  CHECK(rmf_population_create(coords, 2, 5, &pop) == RMF_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(rmf_last_error()).find("dim") != std::string::npos);

  rmf_reference_set* ref = nullptr;
  CHECK(rmf_reference_set_generate(RMF_FRONT_LINEAR, 2, 0.0, 1.0, &ref) ==
        RMF_ERROR_DOMAIN);
  CHECK(std::strlen(rmf_last_error()) > 0);
}

TEST_CASE("population round trip through the C surface") {
  const double coords[6] = {0.1, 0.9, 0.5, 0.5, 0.9, 0.1};
  Handles h;
  REQUIRE(rmf_population_create(coords, 3, 2, &h.pop) == RMF_OK);
  CHECK(rmf_population_size(h.pop) == 3);
  CHECK(rmf_population_dim(h.pop) == 2);
  double out[2] = {0, 0};
  REQUIRE(rmf_population_point(h.pop, 1, out) == RMF_OK);
  CHECK(out[0] == 0.5);
  CHECK(out[1] == 0.5);
  CHECK(rmf_population_point(h.pop, 9, out) == RMF_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("generated front round trips through CSV") {
  testsup::TempDir dir("capi_csv");
  Handles h;
  REQUIRE(rmf_reference_set_generate(RMF_FRONT_CONVEX_SQRT, 11, 0.0, 1.0, &h.ref) ==
          RMF_OK);
  CHECK(rmf_reference_set_size(h.ref) == 11);
  CHECK(rmf_reference_set_dim(h.ref) == 2);

  const std::string path = dir.file("front.csv");
  REQUIRE(rmf_reference_set_save_csv(h.ref, path.c_str()) == RMF_OK);

  rmf_reference_set* loaded = nullptr;
  REQUIRE(rmf_reference_set_load_csv(path.c_str(), &loaded) == RMF_OK);
  CHECK(rmf_reference_set_size(loaded) == 11);
  double a[2], b[2];
  for (size_t i = 0; i < 11; ++i) {
    REQUIRE(rmf_reference_set_point(h.ref, i, a) == RMF_OK);
    REQUIRE(rmf_reference_set_point(loaded, i, b) == RMF_OK);
    CHECK(a[0] == b[0]);
    CHECK(a[1] == b[1]);
  }
  rmf_reference_set_destroy(loaded);

  double dist = -1.0;
  const double probe[2] = {0.0, 2.0};
  REQUIRE(rmf_reference_set_min_distance(h.ref, probe, 2, &dist) == RMF_OK);
  CHECK(dist == 1.0);
  CHECK(rmf_reference_set_min_distance(h.ref, probe, 3, &dist) == RMF_ERROR_DOMAIN);
}

TEST_CASE("evaluation of a perfect population") {
  Handles h;
  REQUIRE(rmf_reference_set_generate(RMF_FRONT_CONVEX_SQRT, 101, 0.0, 1.0, &h.ref) ==
          RMF_OK);
  std::vector<double> coords;
  double p[2];
  for (size_t i = 0; i < 101; ++i) {
    REQUIRE(rmf_reference_set_point(h.ref, i, p) == RMF_OK);
    coords.push_back(p[0]);
    coords.push_back(p[1]);
  }
  REQUIRE(rmf_population_create(coords.data(), 101, 2, &h.pop) == RMF_OK);
  REQUIRE(rmf_evaluate(h.pop, h.ref, nullptr, 0, nullptr, 0, &h.eval) == RMF_OK);

  CHECK(rmf_evaluation_convergence(h.eval) == 303.0);
  CHECK(rmf_evaluation_diversity(h.eval) == 0.0);
  CHECK(rmf_evaluation_solution_count(h.eval) == 101);
  CHECK(rmf_evaluation_cluster_count(h.eval) == 50);

  size_t counts[4] = {1, 1, 1, 1};
  REQUIRE(rmf_evaluation_region_counts(h.eval, counts) == RMF_OK);
  CHECK(counts[0] == 101);
  CHECK(counts[1] + counts[2] + counts[3] == 0);

  double grade = 0.0, raw = 0.0;
  rmf_region region = RMF_REGION_3;
  int64_t cluster = -2;
  REQUIRE(rmf_evaluation_solution(h.eval, 0, &grade, &raw, &region, &cluster) ==
          RMF_OK);
  CHECK(grade == 3.0);
  CHECK(raw == 3.0);
  CHECK(region == RMF_REGION_ON_FRONT);
  CHECK(cluster == 0);

  size_t members = 0;
  double mean = 0.0;
  REQUIRE(rmf_evaluation_cluster(h.eval, 49, &members, &mean) == RMF_OK);
  CHECK(members >= 2);
  CHECK(mean == 3.0);
}

TEST_CASE("windows flow through evaluation") {
  Handles h;
  REQUIRE(rmf_reference_set_generate(RMF_FRONT_LINEAR, 11, 0.0, 1.0, &h.ref) ==
          RMF_OK);
  std::vector<double> coords;
  double p[2];
  for (size_t i = 0; i < 11; ++i) {
    REQUIRE(rmf_reference_set_point(h.ref, i, p) == RMF_OK);
    coords.push_back(p[0]);
    coords.push_back(p[1]);
  }
  REQUIRE(rmf_population_create(coords.data(), 11, 2, &h.pop) == RMF_OK);

  const double bounds[4] = {0.0, 0.4, 0.45, 1.0};
  REQUIRE(rmf_evaluate(h.pop, h.ref, nullptr, 0, bounds, 2, &h.eval) == RMF_OK);
  REQUIRE(rmf_evaluation_window_count(h.eval) == 2);
  rmf_window_stat w0{}, w1{};
  REQUIRE(rmf_evaluation_window(h.eval, 0, &w0) == RMF_OK);
  REQUIRE(rmf_evaluation_window(h.eval, 1, &w1) == RMF_OK);
  CHECK(w0.cluster_count + w1.cluster_count == 5);
  CHECK(w0.convergence + w1.convergence == rmf_evaluation_convergence(h.eval));
  CHECK(w0.has_diversity == 1);
  CHECK(w0.is_catch_all == 0);

  // Reversed bounds propagate as a domain error.
  const double bad[2] = {0.9, 0.1};
  rmf_evaluation* eval2 = nullptr;
  CHECK(rmf_evaluate(h.pop, h.ref, nullptr, 0, bad, 1, &eval2) == RMF_ERROR_DOMAIN);
}

TEST_CASE("explicit pairs and pairing files") {
  testsup::TempDir dir("capi_pairs");
  Handles h;

  // 3D needs explicit pairs.
  const double ref3[9] = {0, 0, 1, 0, 1, 0, 1, 0, 0};
  REQUIRE(rmf_reference_set_create(ref3, 3, 3, &h.ref) == RMF_OK);
  const double sol[3] = {0.0, 0.5, 0.5};
  REQUIRE(rmf_population_create(sol, 1, 3, &h.pop) == RMF_OK);

  rmf_evaluation* no_pairs = nullptr;
  CHECK(rmf_evaluate(h.pop, h.ref, nullptr, 0, nullptr, 0, &no_pairs) ==
        RMF_ERROR_DOMAIN);

  const std::string path = dir.write("pairs.txt", "0 1\n1 2\n");
  size_t count = 0;
  REQUIRE(rmf_load_pairs(path.c_str(), nullptr, &count) == RMF_OK);
  REQUIRE(count == 2);
  std::vector<size_t> pairs(2 * count);
  REQUIRE(rmf_load_pairs(path.c_str(), pairs.data(), &count) == RMF_OK);
  CHECK(pairs == std::vector<size_t>{0, 1, 1, 2});

  REQUIRE(rmf_evaluate(h.pop, h.ref, pairs.data(), count, nullptr, 0, &h.eval) ==
          RMF_OK);
  double grade = 0.0;
  rmf_region region = RMF_REGION_3;
  REQUIRE(rmf_evaluation_solution(h.eval, 0, &grade, nullptr, &region, nullptr) ==
          RMF_OK);
  CHECK(region == RMF_REGION_2);
  CHECK(grade >= 1.0);
  CHECK(grade <= 2.0);
}

TEST_CASE("report files are written") {
  testsup::TempDir dir("capi_report");
  Handles h;
  REQUIRE(rmf_reference_set_generate(RMF_FRONT_LINEAR, 5, 0.0, 1.0, &h.ref) ==
          RMF_OK);
  const double coords[4] = {0.25, 0.75, 7.0, 7.0};
  REQUIRE(rmf_population_create(coords, 2, 2, &h.pop) == RMF_OK);
  REQUIRE(rmf_evaluate(h.pop, h.ref, nullptr, 0, nullptr, 0, &h.eval) == RMF_OK);

  const std::string path = dir.file("report.json");
  REQUIRE(rmf_evaluation_save_report(h.eval, path.c_str()) == RMF_OK);

  const auto j = nlohmann::json::parse(testsup::slurp(path));
  CHECK(j["solutions"].size() == 2);
  CHECK(j["solutions"][1]["region"].get<std::string>() == "region3");
  CHECK(!testsup::slurp(path + ".plot.csv").empty());

  CHECK(rmf_evaluation_save_report(h.eval, "/nonexistent/dir/report.json") ==
        RMF_ERROR_IO);
}

TEST_CASE("igd through the C surface") {
  Handles h;
  REQUIRE(rmf_reference_set_generate(RMF_FRONT_LINEAR, 5, 0.0, 1.0, &h.ref) ==
          RMF_OK);
  const double one[2] = {0.0, 2.0};
  REQUIRE(rmf_population_create(one, 1, 2, &h.pop) == RMF_OK);

  // Mean over the five reference points of the distance to (0, 2).
  double expected = 0.0;
  for (size_t i = 0; i < 5; ++i) {
    double p[2];
    rmf_reference_set_point(h.ref, i, p);
    expected += std::sqrt(p[0] * p[0] + (p[1] - 2.0) * (p[1] - 2.0));
  }
  expected /= 5.0;

  double value = -1.0;
  REQUIRE(rmf_igd(h.pop, h.ref, &value) == RMF_OK);
  CHECK(value == expected);

  rmf_population* empty = nullptr;
  REQUIRE(rmf_population_create(nullptr, 0, 2, &empty) == RMF_OK);
  CHECK(rmf_igd(empty, h.ref, &value) == RMF_ERROR_DOMAIN);
  rmf_population_destroy(empty);
}

TEST_CASE("combined scores and comparison files") {
  const double conv[2] = {482.31, 373.83};
  const double div[2] = {3.22, 3.38};
  double s1[2], s2[2], score[2];
  size_t ranking[2];
  REQUIRE(rmf_combined_score(conv, div, 2, 0.5, 0.5, s1, s2, score, ranking) ==
          RMF_OK);
  CHECK(score[0] == 1.0);
  CHECK(score[1] == 0.0);
  CHECK(ranking[0] == 0);
  CHECK(ranking[1] == 1);

  CHECK(rmf_combined_score(conv, div, 2, -1.0, 0.5, s1, s2, score, ranking) ==
        RMF_ERROR_DOMAIN);
  CHECK(rmf_combined_score(conv, div, 0, 0.5, 0.5, s1, s2, score, ranking) ==
        RMF_ERROR_DOMAIN);

  testsup::TempDir dir("capi_cmp");
  const char* names[2] = {"first", "second"};
  const std::string path = dir.file("cmp.json");
  REQUIRE(rmf_save_comparison(names, conv, div, 2, 0.5, 0.5, path.c_str()) ==
          RMF_OK);
  const auto j = nlohmann::json::parse(testsup::slurp(path));
  CHECK(j["ranking"][0]["name"].get<std::string>() == "first");
}
