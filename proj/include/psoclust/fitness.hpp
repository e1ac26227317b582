#pragma once

#include "psoclust/types.hpp"

namespace psoclust {

/// N x K matrix of Euclidean distances from every point to every centroid.
Matrix distance_matrix(const DataSet& data, const CentroidSet& centroids);

/// Nearest centroid per point. Exact ties go to the lowest centroid index.
Assignment assign_points(const DataSet& data, const CentroidSet& centroids);

/// Quantization error: the per-cluster mean member distance, summed over
/// non-empty clusters and divided by K. Empty clusters add nothing to the
/// sum but still count in the denominator.
double quantization_error(const DataSet& data, const CentroidSet& centroids,
                          const Assignment& assignment);

/// Sum of squared distances from each point to its assigned centroid.
double sse(const DataSet& data, const CentroidSet& centroids, const Assignment& assignment);

/// assign_points followed by quantization_error.
double evaluate(const DataSet& data, const CentroidSet& centroids);

}  // namespace psoclust
