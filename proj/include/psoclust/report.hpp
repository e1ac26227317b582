#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "psoclust/types.hpp"

namespace psoclust {

struct ReportOptions {
  /// wall_time_seconds is the only non-deterministic field; it is written
  /// only on request so that same-seed reports compare byte for byte.
  bool include_timing = false;
};

/// Line-oriented `key = value` document with `[section]` headers. Reals are
/// printed with 17 significant digits, arrays as space-separated values.
void write_report(const RunReport& report, std::ostream& out, const ReportOptions& options = {});
void write_report(const RunReport& report, const std::filesystem::path& path,
                  const ReportOptions& options = {});

RunReport read_report(std::istream& in);
RunReport read_report(const std::filesystem::path& path);

/// Text table of algorithm, seed, final J_e and iterations-to-best, sorted by
/// final J_e ascending. All reports must share the dataset fingerprint and K.
std::string compare_runs(std::span<const RunReport> reports);

/// First iteration whose global best equals the last recorded global best.
std::size_t iterations_to_best(const RunReport& report);

/// printf("%.17g").
std::string format_real(double value);

}  // namespace psoclust
