#include "psoclust/fitness.hpp"

#include <cmath>

namespace psoclust {

namespace {

void check_dims(const DataSet& data, const CentroidSet& centroids) {
  if (centroids.empty()) throw ShapeError("centroids: empty centroid set");
  if (data.dim() != centroids.dim()) {
    throw ShapeError("dimension mismatch: data d=" + std::to_string(data.dim()) +
                     ", centroids d=" + std::to_string(centroids.dim()));
  }
}

void check_assignment(const DataSet& data, const CentroidSet& centroids,
                      const Assignment& assignment) {
  check_dims(data, centroids);
  if (assignment.labels.size() != data.size()) {
    throw ShapeError("assignment: expected " + std::to_string(data.size()) + " labels, got " +
                     std::to_string(assignment.labels.size()));
  }
  for (std::size_t label : assignment.labels) {
    if (label >= centroids.k()) throw ShapeError("assignment: label out of range");
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return acc;
}

}  // namespace

Matrix distance_matrix(const DataSet& data, const CentroidSet& centroids) {
  check_dims(data, centroids);
  Matrix out(data.size(), centroids.k());
  for (std::size_t p = 0; p < data.size(); ++p) {
    for (std::size_t j = 0; j < centroids.k(); ++j) {
      out(p, j) = std::sqrt(squared_distance(data.point(p), centroids.centroid(j)));
    }
  }
  return out;
}

Assignment assign_points(const DataSet& data, const CentroidSet& centroids) {
  check_dims(data, centroids);
  Assignment out;
  out.labels.resize(data.size());
  for (std::size_t p = 0; p < data.size(); ++p) {
    // Squared distances order the same way and avoid sqrt collapsing near-ties.
    std::size_t best = 0;
    double best_dist = squared_distance(data.point(p), centroids.centroid(0));
    for (std::size_t j = 1; j < centroids.k(); ++j) {
      const double dist = squared_distance(data.point(p), centroids.centroid(j));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    out.labels[p] = best;
  }
  return out;
}

double quantization_error(const DataSet& data, const CentroidSet& centroids,
                          const Assignment& assignment) {
  check_assignment(data, centroids, assignment);
  const std::size_t k = centroids.k();
  std::vector<double> dist_sum(k, 0.0);
  std::vector<std::size_t> members(k, 0);
  for (std::size_t p = 0; p < data.size(); ++p) {
    const std::size_t j = assignment.labels[p];
    dist_sum[j] += std::sqrt(squared_distance(data.point(p), centroids.centroid(j)));
    ++members[j];
  }
  double total = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    if (members[j] > 0) total += dist_sum[j] / static_cast<double>(members[j]);
  }
  return total / static_cast<double>(k);
}

double sse(const DataSet& data, const CentroidSet& centroids, const Assignment& assignment) {
  check_assignment(data, centroids, assignment);
  double total = 0.0;
  for (std::size_t p = 0; p < data.size(); ++p) {
    total += squared_distance(data.point(p), centroids.centroid(assignment.labels[p]));
  }
  return total;
}

double evaluate(const DataSet& data, const CentroidSet& centroids) {
  return quantization_error(data, centroids, assign_points(data, centroids));
}

}  // namespace psoclust
