#include "psoclust/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "psoclust/data_io.hpp"
#include "psoclust/fitness.hpp"
#include "psoclust/frames.hpp"
#include "psoclust/pso.hpp"
#include "psoclust/report.hpp"

namespace psoclust {

namespace {

struct RawFlags {
  std::string algorithm = "pso";
  std::string r_sampling = "component";
  std::optional<double> velocity_epsilon;
  std::optional<std::string> frames;
  std::optional<std::string> data;
  std::optional<std::string> manual_init;
  std::optional<std::string> report;
  std::vector<std::string> compare_files;
};

}  // namespace

CliOptions parse_args(std::span<const std::string> args) {
  CliOptions opts;
  RawFlags raw;
  RunConfig& cfg = opts.config;

  CLI::App app{"PSO data clustering with a K-Means baseline and hybrid seeding", "psoclust"};
  app.add_option("--algorithm", raw.algorithm, "Clustering algorithm")
      ->check(CLI::IsMember({"pso", "kmeans", "hybrid"}))
      ->capture_default_str();
  app.add_option("--centroids", cfg.centroids, "Number of clusters K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dimensions", cfg.dimensions, "Number of data columns used")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--subset-offset", opts.subset_offset, "First data column used (0-based)")
      ->capture_default_str();
  app.add_option("--particles", cfg.particles, "Swarm size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--iterations", cfg.iterations, "PSO iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--w", cfg.w, "Inertia weight")->capture_default_str();
  app.add_option("--c1", cfg.c1, "Cognitive acceleration")->capture_default_str();
  app.add_option("--c2", cfg.c2, "Social acceleration")->capture_default_str();
  app.add_option("--seed", cfg.rng_seed, "RNG seed")->capture_default_str();
  app.add_option("--velocity-epsilon", raw.velocity_epsilon,
                 "Stop once every velocity component is below this");
  app.add_option("--r-sampling", raw.r_sampling, "Random factor granularity")
      ->check(CLI::IsMember({"component", "scalar"}))
      ->capture_default_str();
  app.add_option("--manual-init", raw.manual_init, "CSV file with K x d initial centroids");
  app.add_option("--kmeans-max-iters", cfg.kmeans_max_iters, "Lloyd iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--kmeans-tol", cfg.kmeans_tol, "Lloyd |dSSE| tolerance")->capture_default_str();
  auto* data_opt = app.add_option("--data", raw.data, "Input CSV file");
  auto* iris_opt = app.add_flag("--iris", opts.iris, "Use the built-in Iris dataset");
  data_opt->excludes(iris_opt);
  app.add_flag("--header", opts.has_header, "The CSV file has a header row");
  app.add_option("--frames", raw.frames, "Directory for per-iteration SVG frames");
  app.add_option("--report", raw.report, "Report output path (default: stdout)");
  app.add_flag("--timing", opts.timing, "Include wall-clock time in the report");

  auto* compare = app.add_subcommand("compare", "Tabulate final fitness across report files");
  compare->add_option("reports", raw.compare_files, "Report files")->required()->expected(2, -1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    throw UsageError(out.str() + err.str(), code);
  }

  opts.compare = compare->parsed();
  if (opts.compare) {
    opts.compare_reports.assign(raw.compare_files.begin(), raw.compare_files.end());
    return opts;
  }
  if (!raw.data && !opts.iris) {
    throw UsageError("missing dataset: pass --data <csv> or --iris\n" + app.help(), 2);
  }

  cfg.algorithm = parse_algorithm(raw.algorithm);
  cfg.r_sampling = parse_r_sampling(raw.r_sampling);
  cfg.velocity_epsilon = raw.velocity_epsilon;
  cfg.frames = raw.frames;
  if (raw.data) opts.data_path = *raw.data;
  if (raw.manual_init) opts.manual_init_path = *raw.manual_init;
  if (raw.report) opts.report_path = *raw.report;
  return opts;
}

DataSet load_dataset(const CliOptions& options) {
  DataSet data = options.iris ? builtin_iris() : load_csv(*options.data_path, options.has_header);
  if (options.subset_offset == 0 && options.config.dimensions == data.dim()) return data;
  return subset_dims(data, options.subset_offset, options.config.dimensions);
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliOptions opts;
  try {
    opts = parse_args(args);
  } catch (const UsageError& e) {
    (e.exit_code() == 0 ? out : err) << e.what();
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (opts.compare) {
      std::vector<RunReport> reports;
      for (const auto& path : opts.compare_reports) reports.push_back(read_report(path));
      out << compare_runs(reports);
      return 0;
    }

    const DataSet data = load_dataset(opts);
    RunConfig& cfg = opts.config;
    if (opts.manual_init_path) cfg.manual_init = load_csv(*opts.manual_init_path, false).points();
    validate_config(cfg, data);

    std::optional<FrameWriter> frames;
    if (cfg.frames) frames.emplace(*cfg.frames, data, err);
    SwarmObserver observer;
    if (frames) {
      observer = [&](const Swarm& swarm, const IterationRecord& record) {
        if (!frames->enabled()) {
          frames->emit(swarm, {}, record.iteration);
          return;
        }
        frames->emit(swarm, assign_points(data, swarm.global_best_position), record.iteration);
      };
    }

    const RunReport report = run_algorithm(data, cfg, observer);
    const ReportOptions report_options{.include_timing = opts.timing};
    if (opts.report_path) {
      write_report(report, *opts.report_path, report_options);
      out << "algorithm=" << to_string(cfg.algorithm) << " seed=" << cfg.rng_seed
          << " iterations=" << report.per_iteration.size()
          << " final_fitness=" << format_real(report.final_fitness) << "\n";
    } else {
      write_report(report, out, report_options);
    }
    out.flush();
    if (!out) {
      err << "error: failed writing output\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace psoclust
