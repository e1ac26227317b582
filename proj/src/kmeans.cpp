#include "psoclust/kmeans.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "psoclust/data_io.hpp"
#include "psoclust/fitness.hpp"

namespace psoclust {

CentroidSet kmeans_init(const DataSet& data, std::size_t k, RngStream& rng) {
  if (k < 1) throw ConfigError("centroids: must be positive");
  if (k > data.size()) {
    throw ConfigError("centroids: K-Means needs K <= N (K=" + std::to_string(k) +
                      ", N=" + std::to_string(data.size()) + ")");
  }
  // Partial Fisher-Yates over the point indices.
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Matrix out(k, data.dim());
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t pick = j + rng.uniform_index(order.size() - j);
    std::swap(order[j], order[pick]);
    const auto src = data.point(order[j]);
    std::copy(src.begin(), src.end(), out.row(j).begin());
  }
  return CentroidSet(std::move(out));
}

KMeansStep kmeans_step(const DataSet& data, const CentroidSet& centroids, RngStream& rng) {
  KMeansStep step;
  step.assignment = assign_points(data, centroids);

  const std::size_t k = centroids.k();
  const std::size_t d = centroids.dim();
  Matrix sums(k, d, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t p = 0; p < data.size(); ++p) {
    const std::size_t j = step.assignment.labels[p];
    const auto x = data.point(p);
    auto acc = sums.row(j);
    for (std::size_t c = 0; c < d; ++c) acc[c] += x[c];
    ++counts[j];
  }

  Matrix moved(k, d);
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] == 0) {
      const auto src = data.point(rng.uniform_index(data.size()));
      std::copy(src.begin(), src.end(), moved.row(j).begin());
      ++step.reseeded;
      continue;
    }
    const double n = static_cast<double>(counts[j]);
    for (std::size_t c = 0; c < d; ++c) moved(j, c) = sums(j, c) / n;
  }
  step.centroids = CentroidSet(std::move(moved));
  step.sse = sse(data, step.centroids, step.assignment);
  return step;
}

KMeansResult kmeans_run_from(const DataSet& data, CentroidSet initial, RngStream& rng,
                             std::size_t max_iters, double tol, const SwarmObserver& observer) {
  if (max_iters < 1) throw ConfigError("kmeans_max_iters: must be positive");
  if (!(tol >= 0.0)) throw ConfigError("kmeans_tol: must be non-negative");

  KMeansResult result;
  RunReport& report = result.report;
  report.config.algorithm = Algorithm::kmeans;
  report.config.centroids = initial.k();
  report.config.dimensions = data.dim();
  report.config.particles = 1;
  report.config.kmeans_max_iters = max_iters;
  report.config.kmeans_tol = tol;
  report.config.rng_seed = rng.seed();
  report.data_points = data.size();
  report.data_fingerprint = data_fingerprint(data);
  report.stop_reason = StopReason::max_iters;

  CentroidSet current = std::move(initial);
  std::optional<Assignment> previous_labels;
  std::optional<double> previous_sse;
  double best_fitness = kUnsetFitness;
  CentroidSet best_position;

  for (std::size_t t = 0; t < max_iters; ++t) {
    KMeansStep step = kmeans_step(data, current, rng);
    const double fitness = evaluate(data, step.centroids);
    if (fitness < best_fitness) {
      best_fitness = fitness;
      best_position = step.centroids;
    }

    IterationRecord record;
    record.iteration = t;
    record.global_best_fitness = best_fitness;
    record.particle_fitness = {fitness};
    record.global_best_position = best_position;
    record.sse = step.sse;
    report.per_iteration.push_back(record);

    bool converged = false;
    if (step.reseeded == 0) {
      converged = step.centroids == current ||
                  (previous_labels && *previous_labels == step.assignment) ||
                  (previous_sse && std::abs(*previous_sse - step.sse) <= tol);
    }
    previous_labels = std::move(step.assignment);
    previous_sse = step.sse;
    current = std::move(step.centroids);

    if (observer) {
      Swarm snapshot;
      ParticleState p;
      p.position = current;
      p.velocity = Matrix(current.k(), current.dim(), 0.0);
      p.best_position = best_position;
      p.best_fitness = best_fitness;
      p.fitness = fitness;
      snapshot.particles.push_back(std::move(p));
      snapshot.global_best_position = best_position;
      snapshot.global_best_fitness = best_fitness;
      observer(snapshot, report.per_iteration.back());
    }
    if (converged) {
      report.stop_reason = StopReason::converged;
      break;
    }
  }

  result.assignment = assign_points(data, current);
  report.final_assignment = result.assignment;
  report.final_fitness = quantization_error(data, current, result.assignment);
  report.final_centroids = current;
  result.centroids = std::move(current);
  return result;
}

KMeansResult kmeans_run(const DataSet& data, std::size_t k, RngStream& rng, std::size_t max_iters,
                        double tol, const SwarmObserver& observer) {
  CentroidSet initial = kmeans_init(data, k, rng);
  return kmeans_run_from(data, std::move(initial), rng, max_iters, tol, observer);
}

RunReport kmeans_baseline(const DataSet& data, const RunConfig& cfg, const SwarmObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(cfg, data);
  RngStream rng(cfg.rng_seed);
  CentroidSet initial = cfg.manual_init ? CentroidSet(*cfg.manual_init)
                                        : kmeans_init(data, cfg.centroids, rng);
  RunReport report =
      kmeans_run_from(data, std::move(initial), rng, cfg.kmeans_max_iters, cfg.kmeans_tol, observer)
          .report;
  report.config = cfg;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace psoclust
