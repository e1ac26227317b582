#pragma once

// Test-only reference computations. These deliberately share no code with
// the library: plain nested vectors, their own loops and their own RNG.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "psoclust/types.hpp"

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline Rows to_rows(const psoclust::Matrix& m) {
  Rows out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline psoclust::Matrix to_matrix(const Rows& rows) {
  psoclust::Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(a[i] - b[i], 2);
  return std::sqrt(s);
}

/// Exhaustive argmin: first index reaching the minimum distance.
inline std::vector<std::size_t> argmin_labels(const Rows& points, const Rows& centroids) {
  std::vector<std::size_t> labels;
  for (const auto& p : points) {
    std::vector<double> d;
    for (const auto& c : centroids) d.push_back(euclid(p, c));
    double lowest = d[0];
    for (double v : d) lowest = std::min(lowest, v);
    std::size_t idx = 0;
    while (d[idx] != lowest) ++idx;
    labels.push_back(idx);
  }
  return labels;
}

/// Quantization error evaluated cluster by cluster: for each centroid,
/// gather its members, average their distances, skip empty clusters, and
/// divide the total by the number of centroids.
inline double quantization_error(const Rows& points, const Rows& centroids,
                                 const std::vector<std::size_t>& labels) {
  double total = 0.0;
  for (std::size_t j = 0; j < centroids.size(); ++j) {
    std::vector<double> member_dist;
    for (std::size_t p = 0; p < points.size(); ++p)
      if (labels[p] == j) member_dist.push_back(euclid(points[p], centroids[j]));
    if (member_dist.empty()) continue;
    double s = 0.0;
    for (double v : member_dist) s += v;
    total += s / static_cast<double>(member_dist.size());
  }
  return total / static_cast<double>(centroids.size());
}

inline double sse(const Rows& points, const Rows& centroids, const std::vector<std::size_t>& labels) {
  double total = 0.0;
  for (std::size_t p = 0; p < points.size(); ++p) total += std::pow(euclid(points[p], centroids[labels[p]]), 2);
  return total;
}

inline Rows random_rows(std::mt19937& gen, std::size_t n, std::size_t d, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Rows out(n, std::vector<double>(d));
  for (auto& r : out)
    for (auto& v : r) v = u(gen);
  return out;
}

/// Two isotropic Gaussian blobs in 2-D, `n` points split evenly.
struct Blobs {
  Rows points;
  Rows centers;
};

inline Blobs two_blobs(std::uint32_t seed, std::size_t n, double sigma, double separation) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  Blobs b;
  b.centers = {{0.0, 0.0}, {separation, 0.0}};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = b.centers[i % 2];
    b.points.push_back({c[0] + noise(gen), c[1] + noise(gen)});
  }
  return b;
}

inline bool relative_close(double a, double b, double rel) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace oracle
