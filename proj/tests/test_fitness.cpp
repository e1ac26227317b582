#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "psoclust/fitness.hpp"

using namespace psoclust;

TEST_CASE("distance_matrix basic cases") {
  const DataSet data(Matrix::from_rows({{0, 0}}));
  CHECK(distance_matrix(data, CentroidSet(Matrix::from_rows({{3, 4}})))(0, 0) == 5.0);
  CHECK(distance_matrix(data, CentroidSet(Matrix::from_rows({{0, 0}})))(0, 0) == 0.0);
  CHECK_THROWS_AS(distance_matrix(data, CentroidSet(Matrix::from_rows({{0, 0, 0}}))), ShapeError);
}

TEST_CASE("distance_matrix matches element-wise recomputation") {
  std::mt19937 gen(11);
  const auto points = oracle::random_rows(gen, 10, 3, -5, 5);
  const auto cents = oracle::random_rows(gen, 3, 3, -5, 5);
  const Matrix dist = distance_matrix(DataSet(oracle::to_matrix(points)),
                                      CentroidSet(oracle::to_matrix(cents)));
  REQUIRE(dist.rows() == 10);
  REQUIRE(dist.cols() == 3);
  for (std::size_t p = 0; p < 10; ++p)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(dist(p, j) - oracle::euclid(points[p], cents[j])) <= 1e-12);
}

TEST_CASE("assign_points picks the nearest centroid, lowest index on ties") {
  const DataSet one(Matrix::from_rows({{1, 1}}));
  CHECK(assign_points(one, CentroidSet(Matrix::from_rows({{1, 1}, {9, 9}}))).labels[0] == 0);
  const DataSet origin(Matrix::from_rows({{0, 0}}));
  CHECK(assign_points(origin, CentroidSet(Matrix::from_rows({{-1, 0}, {1, 0}}))).labels[0] == 0);
  CHECK(assign_points(origin, CentroidSet(Matrix::from_rows({{5, 0}, {1, 0}, {-1, 0}}))).labels[0] == 1);
}

TEST_CASE("assign_points matches an exhaustive argmin") {
  std::mt19937 gen(3);
  const auto points = oracle::random_rows(gen, 50, 2, 0, 10);
  const auto cents = oracle::random_rows(gen, 4, 2, 0, 10);
  const Assignment a = assign_points(DataSet(oracle::to_matrix(points)), CentroidSet(oracle::to_matrix(cents)));
  CHECK(a.labels == oracle::argmin_labels(points, cents));
}

TEST_CASE("assignment is unchanged by appending a duplicate centroid") {
  std::mt19937 gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto points = oracle::random_rows(gen, 40, 3, -1, 1);
    auto cents = oracle::random_rows(gen, 4, 3, -1, 1);
    const DataSet data(oracle::to_matrix(points));
    const Assignment before = assign_points(data, CentroidSet(oracle::to_matrix(cents)));
    cents.push_back(cents[static_cast<std::size_t>(trial) % 4]);
    CHECK(assign_points(data, CentroidSet(oracle::to_matrix(cents))) == before);
  }
}

TEST_CASE("quantization_error hand-evaluated cases") {
  SUBCASE("points on their centroids") {
    const DataSet data(Matrix::from_rows({{1, 1}, {4, 4}}));
    const CentroidSet c(Matrix::from_rows({{1, 1}, {4, 4}}));
    CHECK(quantization_error(data, c, assign_points(data, c)) == 0.0);
  }
  SUBCASE("two clusters, distances {1,3} and {2}") {
    // Centroid A at 0 with members at -1 and 3; centroid B at 10 with a member at 12.
    const DataSet data(Matrix::from_rows({{-1}, {3}, {12}}));
    const CentroidSet c(Matrix::from_rows({{0}, {10}}));
    const Assignment a{{0, 0, 1}};
    CHECK(quantization_error(data, c, a) == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("empty cluster contributes zero but counts in K") {
    const DataSet data(Matrix::from_rows({{4}, {-4}}));
    const CentroidSet c(Matrix::from_rows({{0}, {100}}));
    const Assignment a = assign_points(data, c);
    CHECK(a.labels == std::vector<std::size_t>{0, 0});
    CHECK(quantization_error(data, c, a) == 2.0);
  }
}

TEST_CASE("quantization_error rejects inconsistent assignments") {
  const DataSet data(Matrix::from_rows({{0}, {1}}));
  const CentroidSet c(Matrix::from_rows({{0}}));
  CHECK_THROWS_AS(quantization_error(data, c, Assignment{{0}}), ShapeError);
  CHECK_THROWS_AS(quantization_error(data, c, Assignment{{0, 1}}), ShapeError);
}

TEST_CASE("quantization_error properties") {
  std::mt19937 gen(21);
  std::uniform_real_distribution<double> shift(-100, 100);
  for (int trial = 0; trial < 50; ++trial) {
    const auto points = oracle::random_rows(gen, 30, 2, -3, 3);
    const auto cents = oracle::random_rows(gen, 3, 2, -3, 3);
    const DataSet data(oracle::to_matrix(points));
    const CentroidSet c(oracle::to_matrix(cents));
    const Assignment a = assign_points(data, c);
    const double je = quantization_error(data, c, a);
    CHECK(je > 0.0);
    CHECK(quantization_error(data, c, a) == je);

    // Joint rigid translation.
    const double dx = shift(gen), dy = shift(gen);
    auto moved_points = points;
    auto moved_cents = cents;
    for (auto& p : moved_points) { p[0] += dx; p[1] += dy; }
    for (auto& m : moved_cents) { m[0] += dx; m[1] += dy; }
    const DataSet moved(oracle::to_matrix(moved_points));
    const CentroidSet moved_c(oracle::to_matrix(moved_cents));
    CHECK(oracle::relative_close(quantization_error(moved, moved_c, assign_points(moved, moved_c)), je, 1e-9));
  }
}

TEST_CASE("sse") {
  const DataSet data(Matrix::from_rows({{0, 0}, {3, 0}}));
  CHECK(sse(data, CentroidSet(Matrix::from_rows({{0, 0}, {3, 0}})), Assignment{{0, 1}}) == 0.0);
  CHECK(sse(DataSet(Matrix::from_rows({{3, 0}})), CentroidSet(Matrix::from_rows({{0, 0}})), Assignment{{0}}) == 9.0);

  std::mt19937 gen(4);
  const auto points = oracle::random_rows(gen, 60, 4, -2, 2);
  const auto cents = oracle::random_rows(gen, 5, 4, -2, 2);
  const DataSet d(oracle::to_matrix(points));
  const CentroidSet c(oracle::to_matrix(cents));
  const Assignment a = assign_points(d, c);
  CHECK(oracle::relative_close(sse(d, c, a), oracle::sse(points, cents, a.labels), 1e-9));
  CHECK_THROWS_AS(sse(d, c, Assignment{{0}}), ShapeError);
}
