#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace psoclust {

/// Raised when a configuration field or an input shape violates its contract.
/// The message always starts with the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two operands disagree on K, d or N.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kUnsetFitness = std::numeric_limits<double>::infinity();

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool all_finite() const;
  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// N points in d-dimensional space. N >= 1, d >= 1, every value finite.
class DataSet {
 public:
  explicit DataSet(Matrix points, std::vector<std::string> feature_names = {});

  const Matrix& points() const { return points_; }
  std::size_t size() const { return points_.rows(); }
  std::size_t dim() const { return points_.cols(); }
  std::span<const double> point(std::size_t p) const { return points_.row(p); }
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  bool operator==(const DataSet&) const = default;

 private:
  Matrix points_;
  std::vector<std::string> feature_names_;
};

/// K centroid positions in d dimensions. A default-constructed set is empty
/// and only serves as a placeholder before the first evaluation.
class CentroidSet {
 public:
  CentroidSet() = default;
  explicit CentroidSet(Matrix positions);

  const Matrix& positions() const { return positions_; }
  std::size_t k() const { return positions_.rows(); }
  std::size_t dim() const { return positions_.cols(); }
  std::span<const double> centroid(std::size_t j) const { return positions_.row(j); }
  bool empty() const { return positions_.empty(); }

  bool operator==(const CentroidSet&) const = default;

 private:
  Matrix positions_;
};

/// Per-point index of the nearest centroid, 0-based.
struct Assignment {
  std::vector<std::size_t> labels;

  bool operator==(const Assignment&) const = default;
};

enum class Algorithm { pso, kmeans, hybrid };

/// How r1 and r2 are drawn in the velocity update.
enum class RSampling {
  per_component,          // independent U(0,1) for every matrix entry
  per_iteration_scalar,   // one r1 and one r2 per particle and iteration
};

std::string to_string(Algorithm algorithm);
std::string to_string(RSampling sampling);
Algorithm parse_algorithm(const std::string& text);
RSampling parse_r_sampling(const std::string& text);

struct RunConfig {
  std::size_t centroids = 2;
  std::size_t dimensions = 2;
  std::size_t particles = 2;
  std::size_t iterations = 50;
  double w = 0.72;
  double c1 = 1.49;
  double c2 = 1.49;
  Algorithm algorithm = Algorithm::pso;
  std::uint64_t rng_seed = 0;
  std::optional<double> velocity_epsilon;
  std::optional<Matrix> manual_init;
  RSampling r_sampling = RSampling::per_component;
  std::optional<std::string> frames;

  // Lloyd baseline and hybrid seeding.
  std::size_t kmeans_max_iters = 100;
  double kmeans_tol = 0.0;

  bool operator==(const RunConfig&) const = default;
};

/// Returns `cfg` unchanged when it is consistent with `data`, throws
/// ConfigError naming the offending field otherwise.
const RunConfig& validate_config(const RunConfig& cfg, const DataSet& data);

struct ParticleState {
  CentroidSet position;
  Matrix velocity;
  CentroidSet best_position;
  double best_fitness = kUnsetFitness;
  /// Fitness of `position` at its last evaluation, +inf before the first one.
  double fitness = kUnsetFitness;
};

struct Swarm {
  std::vector<ParticleState> particles;
  CentroidSet global_best_position;
  double global_best_fitness = kUnsetFitness;

  /// Throws ShapeError unless every particle carries the same K x d shape.
  void check_shapes() const;
};

struct IterationRecord {
  std::size_t iteration = 0;
  double global_best_fitness = kUnsetFitness;
  std::vector<double> particle_fitness;
  CentroidSet global_best_position;
  /// Lloyd runs only: SSE after the centroid move.
  std::optional<double> sse;

  bool operator==(const IterationRecord&) const = default;
};

enum class StopReason { iterations, velocity, converged, max_iters };

std::string to_string(StopReason reason);
StopReason parse_stop_reason(const std::string& text);

struct RunReport {
  RunConfig config;
  std::size_t data_points = 0;
  std::string data_fingerprint;
  std::vector<IterationRecord> per_iteration;
  Assignment final_assignment;
  CentroidSet final_centroids;
  /// Quantization error of final_centroids under final_assignment.
  double final_fitness = kUnsetFitness;
  StopReason stop_reason = StopReason::iterations;
  std::optional<CentroidSet> kmeans_seed;
  double wall_time_seconds = 0.0;

  /// Equality ignores wall_time_seconds.
  bool operator==(const RunReport& other) const;
};

}  // namespace psoclust
