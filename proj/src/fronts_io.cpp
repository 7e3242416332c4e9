#include "rmf/fronts_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "json.hpp"

namespace rmf {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

bool parse_double(const std::string& field, double& out) {
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !field.empty();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return fields;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<Point> load_points(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);

  std::vector<Point> points;
  std::size_t width = 0;
  bool first_data_seen = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t row = li + 1;  // 1-based, as reported in errors
    if (trim(lines[li]).empty()) continue;
    const std::vector<std::string> fields = split_csv(lines[li]);

    std::vector<double> values(fields.size());
    bool numeric = true;
    for (std::size_t f = 0; f < fields.size(); ++f)
      if (!parse_double(fields[f], values[f])) {
        numeric = false;
        break;
      }

    if (!numeric) {
      if (!first_data_seen && points.empty() && row == 1) continue;  // header row
      throw ParseError(path + ": row " + std::to_string(row) +
                       ": non-numeric field");
    }
    if (!first_data_seen) {
      width = fields.size();
      if (width != 2 && width != 3)
        throw ParseError(path + ": row " + std::to_string(row) + ": expected 2 or 3 fields, got " +
                         std::to_string(width));
      first_data_seen = true;
    } else if (fields.size() != width) {
      throw ParseError(path + ": row " + std::to_string(row) + ": expected " +
                       std::to_string(width) + " fields, got " +
                       std::to_string(fields.size()));
    }
    for (double v : values)
      if (!std::isfinite(v))
        throw ParseError(path + ": row " + std::to_string(row) +
                         ": non-finite value");
    points.push_back(width == 2 ? Point(values[0], values[1])
                                : Point(values[0], values[1], values[2]));
  }
  return points;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ReferenceSet generate_front(const FrontSpec& spec) {
  if (spec.n_points < 3) throw DomainError("generate_front: need at least 3 points");
  if (!(spec.f1_lo >= 0.0) || !(spec.f1_lo < spec.f1_hi) ||
      !std::isfinite(spec.f1_hi))
    throw DomainError("generate_front: range must satisfy 0 <= lo < hi");

  std::vector<Point> pts;
  pts.reserve(spec.n_points);
  const double step = (spec.f1_hi - spec.f1_lo) / static_cast<double>(spec.n_points - 1);
  for (std::size_t i = 0; i < spec.n_points; ++i) {
    const double x = i + 1 == spec.n_points
                         ? spec.f1_hi
                         : spec.f1_lo + step * static_cast<double>(i);
    double y = 0.0;
    switch (spec.shape) {
      case FrontShape::ConvexSqrt: y = 1.0 - std::sqrt(x); break;
      case FrontShape::ConcaveQuad: y = 1.0 - x * x; break;
      case FrontShape::Linear: y = 1.0 - x; break;
    }
    pts.emplace_back(x, y);
  }
  return ReferenceSet::canonical(std::move(pts));
}

std::vector<Point> load_population_csv(const std::string& path) {
  return load_points(path);
}

ReferenceSet load_reference_csv(const std::string& path) {
  std::vector<Point> pts = load_points(path);
  if (pts.empty()) throw ParseError(path + ": no data rows");
  return ReferenceSet::canonical(std::move(pts));
}

std::vector<std::pair<std::size_t, std::size_t>> load_pairing_file(
    const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    std::istringstream iss(lines[li]);
    unsigned long long a = 0, b = 0;
    std::string extra;
    if (!(iss >> a >> b) || (iss >> extra))
      throw ParseError(path + ": line " + std::to_string(li + 1) +
                       ": expected two reference indices");
    pairs.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  if (pairs.empty()) throw ParseError(path + ": no pairs");
  return pairs;
}

void save_points_csv(const std::vector<Point>& points, const std::string& path) {
  std::string body = points.empty() || points.front().dim == 2 ? "f1,f2\n" : "f1,f2,f3\n";
  for (const Point& p : points) {
    body += fmt(p.f1());
    body += ',';
    body += fmt(p.f2());
    if (p.dim == 3) {
      body += ',';
      body += fmt(p.f3());
    }
    body += '\n';
  }
  write_file(path, body);
}

std::string plot_data_path(const std::string& report_path) {
  return report_path + ".plot.csv";
}

namespace {

nlohmann::ordered_json window_json(const WindowStat& w) {
  nlohmann::ordered_json j;
  if (w.catch_all) {
    j["start_f1"] = nullptr;
    j["end_f1"] = nullptr;
  } else {
    j["start_f1"] = w.start_f1;
    j["end_f1"] = w.end_f1;
  }
  j["catch_all"] = w.catch_all;
  j["clusters"] = w.cluster_count;
  j["convergence"] = w.convergence;
  if (w.diversity)
    j["diversity"] = *w.diversity;
  else
    j["diversity"] = nullptr;
  return j;
}

}  // namespace

void save_report(const EvaluationReport& report, const GradedPopulation& graded,
                 const std::string& path) {
  nlohmann::ordered_json j;
  j["convergence"] = report.convergence;
  j["diversity"] = report.diversity;
  j["region_counts"] = {
      {"on_front", report.region_histogram[0]},
      {"region1", report.region_histogram[1]},
      {"region2", report.region_histogram[2]},
      {"region3", report.region_histogram[3]},
  };
  j["cluster_means"] = report.cluster_means;
  nlohmann::ordered_json windows = nlohmann::ordered_json::array();
  for (const WindowStat& w : report.local_windows) windows.push_back(window_json(w));
  j["windows"] = std::move(windows);

  nlohmann::ordered_json solutions = nlohmann::ordered_json::array();
  for (const GradedEntry& e : graded.entries) {
    nlohmann::ordered_json s;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (int i = 0; i < e.solution.dim; ++i) coords.push_back(e.solution[i]);
    s["coords"] = std::move(coords);
    s["grade"] = e.grade.value;
    s["raw"] = e.grade.raw;
    s["region"] = to_string(e.grade.region);
    s["degenerate"] = e.grade.degenerate;
    if (e.cluster)
      s["cluster"] = *e.cluster;
    else
      s["cluster"] = nullptr;
    solutions.push_back(std::move(s));
  }
  j["solutions"] = std::move(solutions);
  write_file(path, j.dump(2) + "\n");

  std::string plot = graded.entries.empty() || graded.entries.front().solution.dim == 2
                         ? "f1,f2,grade,region\n"
                         : "f1,f2,f3,grade,region\n";
  for (const GradedEntry& e : graded.entries) {
    for (int i = 0; i < e.solution.dim; ++i) {
      plot += fmt(e.solution[i]);
      plot += ',';
    }
    plot += fmt(e.grade.value);
    plot += ',';
    plot += to_string(e.grade.region);
    plot += '\n';
  }
  write_file(plot_data_path(path), plot);
}

void save_comparison(const ComparisonResult& cmp, const std::string& path) {
  nlohmann::ordered_json j;
  j["alpha"] = cmp.alpha;
  j["beta"] = cmp.beta;
  nlohmann::ordered_json ranking = nlohmann::ordered_json::array();
  for (const AlgorithmScore& s : cmp.ranking) {
    nlohmann::ordered_json r;
    r["name"] = s.name;
    r["convergence"] = s.convergence;
    r["diversity"] = s.diversity;
    r["s1"] = s.s1;
    r["s2"] = s.s2;
    r["score"] = s.score;
    ranking.push_back(std::move(r));
  }
  j["ranking"] = std::move(ranking);
  write_file(path, j.dump(2) + "\n");
}

}  // namespace rmf
