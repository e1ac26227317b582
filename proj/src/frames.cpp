#include "psoclust/frames.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace psoclust {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 640.0;
constexpr double kMargin = 40.0;

// Cluster fill colors, cycled when K exceeds the palette.
constexpr std::array<const char*, 8> kClusterColors = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

// Marker colors per particle.
constexpr std::array<const char*, 6> kParticleColors = {
    "#00a651", "#c800c8", "#0072bd", "#edb120", "#7e2f8e", "#4dbeee"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

FrameWriter::FrameWriter(std::filesystem::path dir, const DataSet& data, std::ostream& log)
    : dir_(std::move(dir)), data_(data), log_(log), enabled_(data.dim() == 2) {
  if (!enabled_) return;
  x_lo_ = x_hi_ = data.points()(0, 0);
  y_lo_ = y_hi_ = data.points()(0, 1);
  for (std::size_t p = 1; p < data.size(); ++p) {
    x_lo_ = std::min(x_lo_, data.points()(p, 0));
    x_hi_ = std::max(x_hi_, data.points()(p, 0));
    y_lo_ = std::min(y_lo_, data.points()(p, 1));
    y_hi_ = std::max(y_hi_, data.points()(p, 1));
  }
  // Degenerate extents still need a non-zero span.
  const double dx = x_hi_ > x_lo_ ? x_hi_ - x_lo_ : 1.0;
  const double dy = y_hi_ > y_lo_ ? y_hi_ - y_lo_ : 1.0;
  x_lo_ -= 0.05 * dx;
  x_hi_ += 0.05 * dx;
  y_lo_ -= 0.05 * dy;
  y_hi_ += 0.05 * dy;
  std::filesystem::create_directories(dir_);
}

std::string FrameWriter::frame_name(std::size_t iteration) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04zu.svg", iteration);
  return buf;
}

std::string FrameWriter::render(const Swarm& swarm, const Assignment& assignment,
                                std::size_t iteration) const {
  const auto sx = [&](double x) {
    return kMargin + (x - x_lo_) / (x_hi_ - x_lo_) * (kWidth - 2 * kMargin);
  };
  const auto sy = [&](double y) {
    return kHeight - kMargin - (y - y_lo_) / (y_hi_ - y_lo_) * (kHeight - 2 * kMargin);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" +
         fmt(kWidth - 2 * kMargin) + "\" height=\"" + fmt(kHeight - 2 * kMargin) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
  char title[96];
  std::snprintf(title, sizeof title, "iteration %zu  J_e = %.6g", iteration,
                swarm.global_best_fitness);
  svg += "<text x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin - 12) +
         "\" font-family=\"monospace\" font-size=\"14\">" + title + "</text>\n";

  svg += "<g id=\"points\">\n";
  for (std::size_t p = 0; p < data_.size(); ++p) {
    const std::size_t label = p < assignment.labels.size() ? assignment.labels[p] : 0;
    svg += "<circle cx=\"" + fmt(sx(data_.points()(p, 0))) + "\" cy=\"" +
           fmt(sy(data_.points()(p, 1))) + "\" r=\"3\" fill=\"" +
           kClusterColors[label % kClusterColors.size()] + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g id=\"particles\">\n";
  for (std::size_t i = 0; i < swarm.particles.size(); ++i) {
    const CentroidSet& pos = swarm.particles[i].position;
    const char* color = kParticleColors[i % kParticleColors.size()];
    for (std::size_t j = 0; j < pos.k(); ++j) {
      const double cx = sx(pos.positions()(j, 0));
      const double cy = sy(pos.positions()(j, 1));
      svg += "<rect x=\"" + fmt(cx - 5) + "\" y=\"" + fmt(cy - 5) +
             "\" width=\"10\" height=\"10\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
    }
  }
  svg += "</g>\n";

  svg += "<g id=\"global-best\">\n";
  const CentroidSet& best = swarm.global_best_position;
  for (std::size_t j = 0; j < best.k(); ++j) {
    const double cx = sx(best.positions()(j, 0));
    const double cy = sy(best.positions()(j, 1));
    svg += "<path d=\"M " + fmt(cx - 9) + " " + fmt(cy) + " L " + fmt(cx + 9) + " " + fmt(cy) +
           " M " + fmt(cx) + " " + fmt(cy - 9) + " L " + fmt(cx) + " " + fmt(cy + 9) +
           "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::optional<std::filesystem::path> FrameWriter::emit(const Swarm& swarm,
                                                       const Assignment& assignment,
                                                       std::size_t iteration) {
  if (!enabled_) {
    if (!notice_logged_) {
      log_ << "notice: frames are only drawn for 2-D data (d=" << data_.dim()
           << "); no frames written\n";
      notice_logged_ = true;
    }
    return std::nullopt;
  }
  const auto path = dir_ / frame_name(iteration);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write frame " + path.string());
  out << render(swarm, assignment, iteration);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
  ++written_;
  return path;
}

}  // namespace psoclust
