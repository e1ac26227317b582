#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "psoclust/cli.hpp"
#include "psoclust/data_io.hpp"
#include "psoclust/report.hpp"

using namespace psoclust;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path(PSOCLUST_TEST_TMP) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_args defaults mirror the listing") {
  const CliOptions o = parse_args(std::vector<std::string>{"--iris"});
  CHECK(o.iris);
  CHECK(o.config == RunConfig{});
  CHECK(o.subset_offset == 0);
  CHECK_FALSE(o.report_path.has_value());
}

TEST_CASE("parse_args maps every flag") {
  const CliOptions o = parse_args(std::vector<std::string>{
      "--algorithm", "hybrid", "--centroids", "3", "--dimensions", "3", "--subset-offset", "1",
      "--particles", "7", "--iterations", "9", "--w", "0.5", "--c1", "1", "--c2", "2", "--seed",
      "123", "--velocity-epsilon", "1e-4", "--r-sampling", "scalar", "--data", "x.csv", "--header",
      "--frames", "fr", "--report", "r.txt", "--manual-init", "m.csv", "--timing"});
  CHECK(o.config.algorithm == Algorithm::hybrid);
  CHECK(o.config.centroids == 3);
  CHECK(o.config.dimensions == 3);
  CHECK(o.subset_offset == 1);
  CHECK(o.config.particles == 7);
  CHECK(o.config.iterations == 9);
  CHECK(o.config.w == 0.5);
  CHECK(o.config.c1 == 1.0);
  CHECK(o.config.c2 == 2.0);
  CHECK(o.config.rng_seed == 123);
  CHECK(o.config.velocity_epsilon == 1e-4);
  CHECK(o.config.r_sampling == RSampling::per_iteration_scalar);
  CHECK(o.data_path == fs::path("x.csv"));
  CHECK(o.has_header);
  CHECK(o.config.frames == "fr");
  CHECK(o.report_path == fs::path("r.txt"));
  CHECK(o.manual_init_path == fs::path("m.csv"));
  CHECK(o.timing);
}

TEST_CASE("parse_args usage errors") {
  CHECK_THROWS_AS(parse_args(std::vector<std::string>{}), UsageError);
  CHECK_THROWS_AS(parse_args(std::vector<std::string>{"--iris", "--data", "a.csv"}), UsageError);
  CHECK_THROWS_AS(parse_args(std::vector<std::string>{"--iris", "--bogus"}), UsageError);
  CHECK_THROWS_AS(parse_args(std::vector<std::string>{"--iris", "--algorithm", "lbest"}), UsageError);
  CHECK_THROWS_AS(parse_args(std::vector<std::string>{"--iris", "--particles", "0"}), UsageError);

  const Outcome none = cli({});
  CHECK(none.code != 0);
  CHECK(none.err.find("missing dataset") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("the listing run writes a report") {
  const fs::path dir = fresh_dir("cli_default");
  const Outcome o = cli({"--iris", "--subset-offset", "2", "--dimensions", "2", "--report",
                         (dir / "r.txt").string()});
  CHECK(o.code == 0);
  const RunReport r = read_report(dir / "r.txt");
  CHECK(r.config.algorithm == Algorithm::pso);
  CHECK(r.per_iteration.size() == 50);
  CHECK(r.data_fingerprint == data_fingerprint(subset_dims(builtin_iris(), 2, 2)));
}

TEST_CASE("report goes to stdout without --report") {
  const Outcome o = cli({"--iris", "--iterations", "2"});
  CHECK(o.code == 0);
  std::istringstream in(o.out);
  CHECK(read_report(in).per_iteration.size() == 2);
}

TEST_CASE("hybrid and kmeans through the CLI") {
  const fs::path dir = fresh_dir("cli_algorithms");
  CHECK(cli({"--algorithm", "hybrid", "--iris", "--report", (dir / "h.txt").string()}).code == 0);
  CHECK(read_report(dir / "h.txt").kmeans_seed.has_value());
  CHECK(cli({"--algorithm", "kmeans", "--iris", "--report", (dir / "k.txt").string()}).code == 0);
  CHECK(cli({"--iris", "--report", (dir / "p.txt").string()}).code == 0);

  const Outcome table = cli({"compare", (dir / "h.txt").string(), (dir / "k.txt").string(),
                             (dir / "p.txt").string()});
  CHECK(table.code == 0);
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 4);
}

TEST_CASE("csv input, manual init and frames") {
  const fs::path dir = fresh_dir("cli_csv");
  write_csv(subset_dims(builtin_iris(), 0, 2), dir / "data.csv");
  {
    std::ofstream m(dir / "init.csv");
    m << "5,3\n6.5,3\n";
  }
  const Outcome o = cli({"--data", (dir / "data.csv").string(), "--header", "--manual-init",
                         (dir / "init.csv").string(), "--iterations", "5", "--frames",
                         (dir / "frames").string(), "--report", (dir / "r.txt").string()});
  CHECK(o.code == 0);
  const RunReport r = read_report(dir / "r.txt");
  CHECK(r.config.manual_init == Matrix::from_rows({{5, 3}, {6.5, 3}}));
  std::size_t frames = 0;
  for (const auto& entry : fs::directory_iterator(dir / "frames")) frames += entry.is_regular_file();
  CHECK(frames == 5);

  std::ofstream bad(dir / "bad_init.csv");
  bad << "1,2,3\n";
  bad.close();
  const Outcome shape = cli({"--iris", "--manual-init", (dir / "bad_init.csv").string()});
  CHECK(shape.code == 1);
  CHECK(shape.err.find("manual_init shape") != std::string::npos);
}

TEST_CASE("runtime failures exit non-zero") {
  CHECK(cli({"--data", "/nonexistent/file.csv"}).code == 1);
  CHECK(cli({"--iris", "--subset-offset", "3"}).code == 1);
  CHECK(cli({"--iris", "--report", "/nonexistent/dir/r.txt"}).code == 1);

  const fs::path dir = fresh_dir("cli_3d");
  const Outcome o = cli({"--iris", "--dimensions", "3", "--frames", (dir / "frames").string(),
                         "--report", (dir / "r.txt").string()});
  CHECK(o.code == 0);
  CHECK(o.err.find("notice") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "frames"));
}
