#include "rmf/fronts_io.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using rmf::FrontShape;
using rmf::PairingScheme;
using rmf::Point;

TEST_CASE("generate_front fixtures") {
  const auto convex = rmf::generate_front({FrontShape::ConvexSqrt, 3, 0.0, 1.0});
  REQUIRE(convex.size() == 3);
  CHECK(convex[0] == Point(0, 1));
  CHECK(convex[1].f2() == 1.0 - std::sqrt(0.5));
  CHECK(convex[2] == Point(1, 0));

  const auto linear = rmf::generate_front({FrontShape::Linear, 3, 0.0, 1.0});
  CHECK(linear[1] == Point(0.5, 0.5));

  const auto concave = rmf::generate_front({FrontShape::ConcaveQuad, 5, 0.0, 1.0});
  const double expected[5] = {1.0, 0.9375, 0.75, 0.4375, 0.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(concave[i].f2() == expected[i]);
}

TEST_CASE("generate_front validates its spec") {
  CHECK_THROWS_AS(rmf::generate_front({FrontShape::Linear, 2, 0.0, 1.0}),
                  rmf::DomainError);
  CHECK_THROWS_AS(rmf::generate_front({FrontShape::Linear, 5, -0.1, 1.0}),
                  rmf::DomainError);
  CHECK_THROWS_AS(rmf::generate_front({FrontShape::Linear, 5, 0.7, 0.7}),
                  rmf::DomainError);
}

TEST_CASE("generate_front output is a valid strictly increasing sample") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> lo(0.0, 0.4);
  std::uniform_real_distribution<double> width(0.05, 2.0);
  std::uniform_int_distribution<std::size_t> n(3, 300);
  for (int it = 0; it < 50; ++it) {
    const double a = lo(rng);
    const double b = a + width(rng);
    const auto shape = static_cast<FrontShape>(it % 3);
    const auto ref = rmf::generate_front({shape, n(rng), a, b});
    CHECK(ref[0].f1() == a);
    CHECK(ref[ref.size() - 1].f1() == b);
    for (std::size_t i = 1; i < ref.size(); ++i)
      CHECK(ref[i - 1].f1() < ref[i].f1());
  }
}

TEST_CASE("population CSV loading") {
  testsup::TempDir dir("io");

  SUBCASE("plain rows") {
    const auto pts = rmf::load_population_csv(
        dir.write("t.csv", "0.0305,0.8270\n0.0414,0.8293\n"));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point(0.0305, 0.8270));
    CHECK(pts[1] == Point(0.0414, 0.8293));
  }
  SUBCASE("header row is auto-detected") {
    const auto pts =
        rmf::load_population_csv(dir.write("h.csv", "f1,f2\n0.5,0.25\n"));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == Point(0.5, 0.25));
  }
  SUBCASE("ragged row names its line") {
    const std::string path = dir.write("r.csv", "1,2\n3\n");
    CHECK_THROWS_WITH_AS(rmf::load_population_csv(path),
                         doctest::Contains("row 2"), rmf::ParseError);
  }
  SUBCASE("non-finite values are rejected") {
    CHECK_THROWS_AS(rmf::load_population_csv(dir.write("inf.csv", "1,inf\n")),
                    rmf::ParseError);
    CHECK_THROWS_AS(rmf::load_population_csv(dir.write("nan.csv", "nan,1\n")),
                    rmf::ParseError);
  }
  SUBCASE("stray text after the header is rejected") {
    CHECK_THROWS_AS(rmf::load_population_csv(dir.write("b.csv", "1,2\nx,y\n")),
                    rmf::ParseError);
  }
  SUBCASE("3D rows load and 4D rows are rejected") {
    const auto pts =
        rmf::load_population_csv(dir.write("d3.csv", "0.1, 0.2, 0.3\n"));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].dim == 3);
    CHECK_THROWS_AS(rmf::load_population_csv(dir.write("d4.csv", "1,2,3,4\n")),
                    rmf::ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(rmf::load_population_csv(dir.file("absent.csv")), rmf::IoError);
  }
}

TEST_CASE("save and load round-trip a population") {
  testsup::TempDir dir("roundtrip");
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Point> pts;
  for (int i = 0; i < 64; ++i) pts.emplace_back(u(rng), u(rng));

  const std::string path = dir.file("pop.csv");
  rmf::save_points_csv(pts, path);
  const auto back = rmf::load_population_csv(path);
  REQUIRE(back.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::fabs(back[i].f1() - pts[i].f1()) <= 1e-15);
    CHECK(std::fabs(back[i].f2() - pts[i].f2()) <= 1e-15);
  }
}

TEST_CASE("pairing file loading") {
  testsup::TempDir dir("pairs");
  const auto pairs =
      rmf::load_pairing_file(dir.write("p.txt", "0 2\n2 4\n\n4 6\n"));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[1] == std::pair<std::size_t, std::size_t>{2, 4});

  CHECK_THROWS_WITH_AS(rmf::load_pairing_file(dir.write("bad.txt", "0 2\n7\n")),
                       doctest::Contains("line 2"), rmf::ParseError);
  CHECK_THROWS_AS(rmf::load_pairing_file(dir.write("empty.txt", "\n")),
                  rmf::ParseError);
}

TEST_CASE("report serialization") {
  testsup::TempDir dir("report");
  const auto ref = rmf::generate_front({FrontShape::ConvexSqrt, 101, 0.0, 1.0});

  // 200 on-front solutions: convergence 600, nothing unclustered.
  std::vector<Point> pop;
  for (int i = 0; i < 200; ++i) {
    const double x = static_cast<double>(i) / 199.0;
    pop.emplace_back(x, 1.0 - std::sqrt(x));
  }
  const auto outcome = rmf::evaluate(pop, ref, PairingScheme::stride2());
  REQUIRE(outcome.report.convergence == 600.0);

  const std::string path = dir.file("report.json");
  rmf::save_report(outcome.report, outcome.graded, path);

  const auto j = nlohmann::json::parse(testsup::slurp(path));
  CHECK(j["convergence"].get<double>() == 600.0);
  CHECK(j["diversity"].get<double>() == outcome.report.diversity);
  CHECK(j["region_counts"]["on_front"].get<std::size_t>() == 200);
  CHECK(j["solutions"].size() == 200);
  CHECK(j["solutions"][0]["grade"].get<double>() == 3.0);
  CHECK(j["solutions"][0]["region"].get<std::string>() == "on_front");
  CHECK(j["cluster_means"].size() == outcome.partition.clusters.size());

  // Companion plot data: header plus one line per solution, no
  // generalized-region rows for a fully clustered population.
  const std::string plot = testsup::slurp(rmf::plot_data_path(path));
  std::size_t lines = 0, region3 = 0;
  std::istringstream ss(plot);
  std::string line;
  while (std::getline(ss, line)) {
    ++lines;
    if (line.find("region3") != std::string::npos) ++region3;
  }
  CHECK(lines == 201);
  CHECK(region3 == 0);
}

TEST_CASE("comparison serialization") {
  testsup::TempDir dir("cmp");
  const auto cmp = rmf::combined_score({{"a", 482.31, 3.22}, {"b", 373.83, 3.38}});
  const std::string path = dir.file("cmp.json");
  rmf::save_comparison(cmp, path);
  const auto j = nlohmann::json::parse(testsup::slurp(path));
  REQUIRE(j["ranking"].size() == 2);
  CHECK(j["ranking"][0]["name"].get<std::string>() == "a");
  CHECK(j["ranking"][0]["score"].get<double>() == 1.0);
  CHECK(j["alpha"].get<double>() == 0.5);
}
