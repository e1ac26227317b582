#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psoclust/types.hpp"

namespace psoclust {

/// Bad command line, or an explicit --help. `exit_code` is what the process
/// should return; the message is the text to print.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, int exit_code)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct CliOptions {
  RunConfig config;
  std::optional<std::filesystem::path> data_path;
  bool iris = false;
  bool has_header = false;
  std::size_t subset_offset = 0;
  std::optional<std::filesystem::path> manual_init_path;
  std::optional<std::filesystem::path> report_path;
  bool timing = false;

  /// `compare` subcommand: report files to tabulate.
  std::vector<std::filesystem::path> compare_reports;
  bool compare = false;
};

/// Parses arguments without the program name.
CliOptions parse_args(std::span<const std::string> args);

/// Loads the dataset named by the options and applies the column subset.
DataSet load_dataset(const CliOptions& options);

/// Full CLI: returns the process exit code, 0 only when the run completed
/// and every requested output was written.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace psoclust
