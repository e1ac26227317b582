#include "psoclust/types.hpp"

#include <algorithm>
#include <cmath>

namespace psoclust {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw ShapeError("matrix: expected " + std::to_string(rows_ * cols_) + " values, got " +
                     std::to_string(values_.size()));
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("matrix: ragged rows");
    values.insert(values.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(values));
}

bool Matrix::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

DataSet::DataSet(Matrix points, std::vector<std::string> feature_names)
    : points_(std::move(points)), feature_names_(std::move(feature_names)) {
  if (points_.rows() < 1) throw ConfigError("points: dataset needs at least one point");
  if (points_.cols() < 1) throw ConfigError("points: dataset needs at least one dimension");
  if (!points_.all_finite()) throw ConfigError("points: non-finite value in dataset");
  if (!feature_names_.empty() && feature_names_.size() != points_.cols()) {
    throw ConfigError("feature_names: expected " + std::to_string(points_.cols()) + " names, got " +
                      std::to_string(feature_names_.size()));
  }
}

CentroidSet::CentroidSet(Matrix positions) : positions_(std::move(positions)) {
  if (positions_.rows() < 1 || positions_.cols() < 1) {
    throw ConfigError("centroids: need K >= 1 and d >= 1");
  }
  if (!positions_.all_finite()) throw ConfigError("centroids: non-finite centroid coordinate");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::pso: return "pso";
    case Algorithm::kmeans: return "kmeans";
    case Algorithm::hybrid: return "hybrid";
  }
  return "unknown";
}

std::string to_string(RSampling sampling) {
  return sampling == RSampling::per_component ? "component" : "scalar";
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "pso") return Algorithm::pso;
  if (text == "kmeans") return Algorithm::kmeans;
  if (text == "hybrid") return Algorithm::hybrid;
  throw ConfigError("algorithm: unknown value '" + text + "'");
}

RSampling parse_r_sampling(const std::string& text) {
  if (text == "component") return RSampling::per_component;
  if (text == "scalar") return RSampling::per_iteration_scalar;
  throw ConfigError("r_sampling: unknown value '" + text + "'");
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::iterations: return "iterations";
    case StopReason::velocity: return "velocity";
    case StopReason::converged: return "converged";
    case StopReason::max_iters: return "max_iters";
  }
  return "unknown";
}

StopReason parse_stop_reason(const std::string& text) {
  if (text == "iterations") return StopReason::iterations;
  if (text == "velocity") return StopReason::velocity;
  if (text == "converged") return StopReason::converged;
  if (text == "max_iters") return StopReason::max_iters;
  throw ConfigError("stop_reason: unknown value '" + text + "'");
}

const RunConfig& validate_config(const RunConfig& cfg, const DataSet& data) {
  if (cfg.centroids < 1) throw ConfigError("centroids: must be positive");
  if (cfg.dimensions < 1) throw ConfigError("dimensions: must be positive");
  if (cfg.particles < 1) throw ConfigError("particles: must be positive");
  if (cfg.iterations < 1) throw ConfigError("iterations: must be positive");
  if (cfg.kmeans_max_iters < 1) throw ConfigError("kmeans_max_iters: must be positive");
  if (!std::isfinite(cfg.w)) throw ConfigError("w: must be finite");
  if (!std::isfinite(cfg.c1)) throw ConfigError("c1: must be finite");
  if (!std::isfinite(cfg.c2)) throw ConfigError("c2: must be finite");
  if (!std::isfinite(cfg.kmeans_tol) || cfg.kmeans_tol < 0.0) {
    throw ConfigError("kmeans_tol: must be finite and non-negative");
  }
  if (cfg.velocity_epsilon && !(*cfg.velocity_epsilon >= 0.0 && std::isfinite(*cfg.velocity_epsilon))) {
    throw ConfigError("velocity_epsilon: must be finite and non-negative");
  }
  if (cfg.dimensions != data.dim()) {
    throw ConfigError("dimensions mismatch: config says " + std::to_string(cfg.dimensions) +
                      ", data has " + std::to_string(data.dim()));
  }
  if (cfg.manual_init) {
    const Matrix& m = *cfg.manual_init;
    if (m.rows() != cfg.centroids || m.cols() != cfg.dimensions) {
      throw ConfigError("manual_init shape: expected " + std::to_string(cfg.centroids) + "x" +
                        std::to_string(cfg.dimensions) + ", got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    if (!m.all_finite()) throw ConfigError("manual_init: non-finite value");
  }
  if (cfg.algorithm != Algorithm::pso && cfg.centroids > data.size()) {
    throw ConfigError("centroids: K-Means needs K <= N (K=" + std::to_string(cfg.centroids) +
                      ", N=" + std::to_string(data.size()) + ")");
  }
  return cfg;
}

void Swarm::check_shapes() const {
  if (particles.empty()) throw ShapeError("swarm: needs at least one particle");
  const std::size_t k = particles.front().position.k();
  const std::size_t d = particles.front().position.dim();
  for (const auto& p : particles) {
    if (p.position.k() != k || p.position.dim() != d || p.velocity.rows() != k ||
        p.velocity.cols() != d || p.best_position.k() != k || p.best_position.dim() != d) {
      throw ShapeError("swarm: particles disagree on K x d shape");
    }
  }
}

bool RunReport::operator==(const RunReport& other) const {
  return config == other.config && data_points == other.data_points &&
         data_fingerprint == other.data_fingerprint && per_iteration == other.per_iteration &&
         final_assignment == other.final_assignment && final_centroids == other.final_centroids &&
         final_fitness == other.final_fitness && stop_reason == other.stop_reason &&
         kmeans_seed == other.kmeans_seed;
}

}  // namespace psoclust
