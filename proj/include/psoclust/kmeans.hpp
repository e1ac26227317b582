#pragma once

#include "psoclust/pso.hpp"
#include "psoclust/rng.hpp"
#include "psoclust/types.hpp"

namespace psoclust {

/// Forgy initialization: k distinct data points, uniformly without replacement.
CentroidSet kmeans_init(const DataSet& data, std::size_t k, RngStream& rng);

struct KMeansStep {
  CentroidSet centroids;
  /// Assignment against the centroids passed in, i.e. before the move.
  Assignment assignment;
  /// SSE of the moved centroids under `assignment`.
  double sse = 0.0;
  /// Number of empty clusters re-seeded to a random data point.
  std::size_t reseeded = 0;
};

/// One Lloyd iteration.
KMeansStep kmeans_step(const DataSet& data, const CentroidSet& centroids, RngStream& rng);

struct KMeansResult {
  CentroidSet centroids;
  Assignment assignment;
  RunReport report;
};

/// Lloyd iterations from `initial` until the assignment (or the centroids)
/// stop changing, |dSSE| <= tol, or max_iters steps.
KMeansResult kmeans_run_from(const DataSet& data, CentroidSet initial, RngStream& rng,
                             std::size_t max_iters = 100, double tol = 0.0,
                             const SwarmObserver& observer = {});

/// Forgy initialization followed by kmeans_run_from.
KMeansResult kmeans_run(const DataSet& data, std::size_t k, RngStream& rng,
                        std::size_t max_iters = 100, double tol = 0.0,
                        const SwarmObserver& observer = {});

/// Standalone baseline driven by a RunConfig (algorithm = kmeans).
RunReport kmeans_baseline(const DataSet& data, const RunConfig& cfg,
                          const SwarmObserver& observer = {});

}  // namespace psoclust
