#include "psoclust/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "psoclust/data_io.hpp"

namespace psoclust {

namespace {

constexpr const char* kFormatTag = "psoclust-report-1";

std::string join_reals(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_real(values[i]);
  }
  return out;
}

std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols());
  if (!m.empty()) out += " " + join_reals(m.values());
  return out;
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    // from_chars rejects "inf"; the only infinity a report carries is an
    // unset fitness.
    if (text == "inf") return kUnsetFitness;
    throw ParseError("report: bad real '" + text + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("report: bad integer '" + text + "'");
  return v;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : tokens(text)) out.push_back(parse_real(tok));
  return out;
}

Matrix parse_matrix(const std::string& text) {
  auto toks = tokens(text);
  if (toks.size() < 2) throw ParseError("report: matrix needs a shape");
  const std::size_t rows = parse_uint(toks[0]);
  const std::size_t cols = parse_uint(toks[1]);
  std::vector<double> values;
  for (std::size_t i = 2; i < toks.size(); ++i) values.push_back(parse_real(toks[i]));
  if (values.size() != rows * cols) throw ParseError("report: matrix value count mismatch");
  return Matrix(rows, cols, std::move(values));
}

CentroidSet parse_centroids(const std::string& text) {
  Matrix m = parse_matrix(text);
  if (m.empty()) return {};
  return CentroidSet(std::move(m));
}

struct Section {
  std::string name;
  std::map<std::string, std::string> values;

  const std::string& at(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw ParseError("report: [" + name + "] missing key '" + key + "'");
    return it->second;
  }
  bool has(const std::string& key) const { return values.contains(key); }
};

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_report(const RunReport& report, std::ostream& out, const ReportOptions& options) {
  const RunConfig& cfg = report.config;
  out << "# psoclust run report\n";
  out << "format = " << kFormatTag << "\n";

  out << "\n[config]\n";
  out << "algorithm = " << to_string(cfg.algorithm) << "\n";
  out << "seed = " << cfg.rng_seed << "\n";
  out << "centroids = " << cfg.centroids << "\n";
  out << "dimensions = " << cfg.dimensions << "\n";
  out << "particles = " << cfg.particles << "\n";
  out << "iterations = " << cfg.iterations << "\n";
  out << "w = " << format_real(cfg.w) << "\n";
  out << "c1 = " << format_real(cfg.c1) << "\n";
  out << "c2 = " << format_real(cfg.c2) << "\n";
  out << "r_sampling = " << to_string(cfg.r_sampling) << "\n";
  out << "velocity_epsilon = "
      << (cfg.velocity_epsilon ? format_real(*cfg.velocity_epsilon) : std::string("none")) << "\n";
  out << "manual_init = " << (cfg.manual_init ? format_matrix(*cfg.manual_init) : "none") << "\n";
  out << "frames = " << cfg.frames.value_or("none") << "\n";
  out << "kmeans_max_iters = " << cfg.kmeans_max_iters << "\n";
  out << "kmeans_tol = " << format_real(cfg.kmeans_tol) << "\n";

  out << "\n[data]\n";
  out << "points = " << report.data_points << "\n";
  out << "fingerprint = " << report.data_fingerprint << "\n";

  if (report.kmeans_seed) {
    out << "\n[kmeans_seed]\n";
    out << "centroids = " << format_matrix(report.kmeans_seed->positions()) << "\n";
  }

  for (const auto& rec : report.per_iteration) {
    out << "\n[iteration " << rec.iteration << "]\n";
    out << "global_best_fitness = " << format_real(rec.global_best_fitness) << "\n";
    out << "particle_fitness = " << join_reals(rec.particle_fitness) << "\n";
    out << "global_best_position = " << format_matrix(rec.global_best_position.positions()) << "\n";
    if (rec.sse) out << "sse = " << format_real(*rec.sse) << "\n";
  }

  out << "\n[result]\n";
  out << "stop_reason = " << to_string(report.stop_reason) << "\n";
  out << "executed_iterations = " << report.per_iteration.size() << "\n";
  out << "final_fitness = " << format_real(report.final_fitness) << "\n";
  out << "final_centroids = " << format_matrix(report.final_centroids.positions()) << "\n";
  out << "final_labels =";
  for (std::size_t label : report.final_assignment.labels) out << ' ' << label;
  out << "\n";

  if (options.include_timing) {
    out << "\n[timing]\n";
    out << "wall_time_seconds = " << format_real(report.wall_time_seconds) << "\n";
  }
}

void write_report(const RunReport& report, const std::filesystem::path& path,
                  const ReportOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report " + path.string());
  write_report(report, out, options);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

RunReport read_report(std::istream& in) {
  std::vector<Section> sections(1);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("report: bad section header", line_no);
      sections.push_back({line.substr(1, line.size() - 2), {}});
      continue;
    }
    const auto eq = line.find(" =");
    if (eq == std::string::npos) throw ParseError("report: expected 'key = value'", line_no);
    std::string value = line.substr(eq + 2);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    sections.back().values[line.substr(0, eq)] = value;
  }
  if (sections.front().values["format"] != kFormatTag) {
    throw ParseError("report: missing or unknown format tag");
  }

  RunReport report;
  bool saw_config = false, saw_data = false, saw_result = false;
  for (const auto& s : sections) {
    if (s.name == "config") {
      saw_config = true;
      RunConfig& cfg = report.config;
      cfg.algorithm = parse_algorithm(s.at("algorithm"));
      cfg.rng_seed = parse_uint(s.at("seed"));
      cfg.centroids = parse_uint(s.at("centroids"));
      cfg.dimensions = parse_uint(s.at("dimensions"));
      cfg.particles = parse_uint(s.at("particles"));
      cfg.iterations = parse_uint(s.at("iterations"));
      cfg.w = parse_real(s.at("w"));
      cfg.c1 = parse_real(s.at("c1"));
      cfg.c2 = parse_real(s.at("c2"));
      cfg.r_sampling = parse_r_sampling(s.at("r_sampling"));
      if (s.at("velocity_epsilon") != "none") cfg.velocity_epsilon = parse_real(s.at("velocity_epsilon"));
      if (s.at("manual_init") != "none") cfg.manual_init = parse_matrix(s.at("manual_init"));
      if (s.at("frames") != "none") cfg.frames = s.at("frames");
      cfg.kmeans_max_iters = parse_uint(s.at("kmeans_max_iters"));
      cfg.kmeans_tol = parse_real(s.at("kmeans_tol"));
    } else if (s.name == "data") {
      saw_data = true;
      report.data_points = parse_uint(s.at("points"));
      report.data_fingerprint = s.at("fingerprint");
    } else if (s.name == "kmeans_seed") {
      report.kmeans_seed = parse_centroids(s.at("centroids"));
    } else if (s.name.starts_with("iteration ")) {
      IterationRecord rec;
      rec.iteration = parse_uint(s.name.substr(10));
      rec.global_best_fitness = parse_real(s.at("global_best_fitness"));
      rec.particle_fitness = parse_reals(s.at("particle_fitness"));
      rec.global_best_position = parse_centroids(s.at("global_best_position"));
      if (s.has("sse")) rec.sse = parse_real(s.at("sse"));
      report.per_iteration.push_back(std::move(rec));
    } else if (s.name == "result") {
      saw_result = true;
      report.stop_reason = parse_stop_reason(s.at("stop_reason"));
      report.final_fitness = parse_real(s.at("final_fitness"));
      report.final_centroids = parse_centroids(s.at("final_centroids"));
      for (const auto& tok : tokens(s.at("final_labels"))) {
        report.final_assignment.labels.push_back(parse_uint(tok));
      }
      if (parse_uint(s.at("executed_iterations")) != report.per_iteration.size()) {
        throw ParseError("report: executed_iterations disagrees with iteration sections");
      }
    } else if (s.name == "timing") {
      report.wall_time_seconds = parse_real(s.at("wall_time_seconds"));
    } else if (!s.name.empty()) {
      throw ParseError("report: unknown section [" + s.name + "]");
    }
  }
  if (!saw_config || !saw_data || !saw_result) {
    throw ParseError("report: missing [config], [data] or [result] section");
  }
  return report;
}

RunReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read report " + path.string());
  return read_report(in);
}

std::size_t iterations_to_best(const RunReport& report) {
  if (report.per_iteration.empty()) return 0;
  const double final_best = report.per_iteration.back().global_best_fitness;
  for (const auto& rec : report.per_iteration) {
    if (rec.global_best_fitness == final_best) return rec.iteration;
  }
  return report.per_iteration.back().iteration;
}

std::string compare_runs(std::span<const RunReport> reports) {
  if (reports.size() < 2) throw ConfigError("compare: need at least two reports");
  for (const auto& r : reports) {
    if (r.data_fingerprint != reports.front().data_fingerprint) {
      throw ConfigError("compare: dataset fingerprints differ (" + reports.front().data_fingerprint +
                        " vs " + r.data_fingerprint + ")");
    }
    if (r.config.centroids != reports.front().config.centroids) {
      throw ConfigError("compare: reports use different K");
    }
  }
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reports[a].final_fitness < reports[b].final_fitness;
  });

  std::ostringstream out;
  out << "algorithm seed final_fitness iterations_to_best\n";
  for (std::size_t i : order) {
    const RunReport& r = reports[i];
    out << to_string(r.config.algorithm) << ' ' << r.config.rng_seed << ' '
        << format_real(r.final_fitness) << ' ' << iterations_to_best(r) << '\n';
  }
  return out.str();
}

}  // namespace psoclust
