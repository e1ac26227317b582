#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "psoclust/types.hpp"

namespace psoclust {

/// Writes one SVG scatter frame per iteration for 2-D data.
///
/// The axis range is the data bounding box padded by 5% on each side and is
/// fixed for the writer's lifetime, so consecutive frames line up. For data
/// with d != 2 every emit() is a no-op; the first one logs a notice.
class FrameWriter {
 public:
  FrameWriter(std::filesystem::path dir, const DataSet& data, std::ostream& log);

  /// Returns the written file, or nothing for the d != 2 no-op.
  std::optional<std::filesystem::path> emit(const Swarm& swarm, const Assignment& assignment,
                                            std::size_t iteration);

  /// Renders a frame without touching the filesystem.
  std::string render(const Swarm& swarm, const Assignment& assignment,
                     std::size_t iteration) const;

  static std::string frame_name(std::size_t iteration);

  bool enabled() const { return enabled_; }
  std::size_t written() const { return written_; }

 private:
  std::filesystem::path dir_;
  const DataSet& data_;
  std::ostream& log_;
  bool enabled_;
  bool notice_logged_ = false;
  std::size_t written_ = 0;
  double x_lo_ = 0, x_hi_ = 1, y_lo_ = 0, y_hi_ = 1;
};

}  // namespace psoclust
