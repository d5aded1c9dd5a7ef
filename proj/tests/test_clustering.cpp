#include <doctest.h>

#include <numeric>
#include <random>

#include "bagcd/clustering.hpp"
#include "bagcd/error.hpp"

using namespace bagcd;

TEST_CASE("worked example: roots of P at sigma 0.7") {
  const std::vector<Complex> r{5.3, 1.09, 0.99, 1.02};
  const auto clusters = cluster_roots(r, 0.7);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].multiplicity == 3);
  CHECK(std::abs(clusters[0].center - 1.036) < 1e-2);
  CHECK(clusters[1].multiplicity == 1);
  CHECK(clusters[1].center.real() == doctest::Approx(5.3));
}

TEST_CASE("singleton") {
  const std::vector<Complex> r{7.0};
  const auto clusters = cluster_roots(r, 0.1);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].center == Complex(7.0));
  CHECK(clusters[0].multiplicity == 1);
}

TEST_CASE("comparison is against the pivot, not the cluster") {
  const std::vector<Complex> r{0.0, 1.0, 2.0};
  const auto clusters = cluster_roots(r, 1.0);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].center.real() == doctest::Approx(0.5));
  CHECK(clusters[0].multiplicity == 2);
  CHECK(clusters[1].center.real() == doctest::Approx(2.0));
  CHECK(clusters[1].multiplicity == 1);
}

TEST_CASE("scan order changes the outcome") {
  const std::vector<Complex> r{1.0, 0.0, 2.0};
  // Pivot 1 absorbs both neighbours when scanned as given.
  const auto given = cluster_roots(r, 1.0, ScanOrder::as_given);
  REQUIRE(given.size() == 1);
  CHECK(given[0].multiplicity == 3);
  CHECK(cluster_roots(r, 1.0).size() == 2);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(cluster_roots({}, 1.0), Error);
  const std::vector<Complex> r{1.0};
  CHECK_THROWS_AS(cluster_roots(r, 0.0), Error);
  CHECK_THROWS_AS(cluster_roots(r, -1.0), Error);
}

TEST_CASE("clustering properties on random root lists") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> s(0.01, 0.8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = 1 + rng() % 10;
    std::vector<Complex> r(size);
    for (auto& z : r) z = Complex(u(rng), rng() % 2 ? u(rng) : 0.0);
    const double sigma = s(rng);
    const auto clusters = cluster_roots(r, sigma, ScanOrder::as_given);

    // Conservation.
    int total = 0;
    for (const auto& c : clusters) {
      CHECK(c.multiplicity >= 1);
      total += c.multiplicity;
    }
    CHECK(total == static_cast<int>(size));

    // Replay: every cluster is the pivot plus later roots within sigma of it,
    // and its center is their mean.
    std::vector<Complex> pending = r;
    for (const auto& c : clusters) {
      const Complex pivot = pending.front();
      std::vector<Complex> absorbed{pivot};
      std::vector<Complex> rest;
      for (std::size_t k = 1; k < pending.size(); ++k) {
        (std::abs(pending[k] - pivot) <= sigma ? absorbed : rest).push_back(pending[k]);
      }
      CHECK(static_cast<int>(absorbed.size()) == c.multiplicity);
      const Complex mean = std::accumulate(absorbed.begin(), absorbed.end(), Complex(0.0)) /
                           static_cast<double>(absorbed.size());
      CHECK(std::abs(mean - c.center) < 1e-14);
      for (const Complex& z : absorbed) CHECK(std::abs(z - pivot) <= sigma);
      pending = rest;
    }
    CHECK(pending.empty());
  }
}

TEST_CASE("small sigma returns the input and re-clustering well-separated centers is stable") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> r(1 + rng() % 8);
    for (auto& z : r) z = Complex(u(rng), u(rng));
    double min_dist = 1e300;
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = i + 1; j < r.size(); ++j) min_dist = std::min(min_dist, std::abs(r[i] - r[j]));
    }
    const double sigma = 0.5 * std::min(min_dist, 1.0);
    const auto clusters = cluster_roots(r, sigma);
    REQUIRE(clusters.size() == r.size());
    for (const auto& c : clusters) {
      CHECK(c.multiplicity == 1);
      CHECK(std::find(r.begin(), r.end(), c.center) != r.end());
    }
    std::vector<Complex> centers;
    for (const auto& c : clusters) centers.push_back(c.center);
    const auto again = cluster_roots(centers, sigma);
    REQUIRE(again.size() == centers.size());
    for (std::size_t k = 0; k < centers.size(); ++k) CHECK(again[k].center == centers[k]);
  }
}
