#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "frechet/error.hpp"
#include "frechet/rng.hpp"
#include "frechet/voronoi.hpp"
#include "helpers.hpp"

using namespace frechet;

TEST_SUITE_BEGIN("voronoi");

TEST_CASE("nearest nucleus wins; ties go to the smaller index") {
  VoronoiPartition part =
      make_partition(SpaceDescriptor::euclidean(1), test::vecs({0.0, 2.0}));
  CHECK(part.size() == 2);
  CHECK(part.cell_of(test::vec({1.0})) == 0);  // exact tie
  CHECK(part.cell_of(test::vec({1.5})) == 1);
  CHECK(part.cell_of(test::vec({0.0})) == 0);  // nucleus belongs to its own cell
  CHECK(part.cell_of(test::vec({2.0})) == 1);
  CHECK(part.cell_of(test::vec({-100.0})) == 0);
}

TEST_CASE("duplicate nuclei collapse onto the first copy") {
  VoronoiPartition part =
      make_partition(SpaceDescriptor::euclidean(1), test::vecs({1.0, 1.0, 4.0}));
  CHECK(part.cell_of(test::vec({1.0})) == 0);
  CHECK(part.cell_of(test::vec({0.0})) == 0);
  CHECK(part.cell_of(test::vec({4.0})) == 2);
}

TEST_CASE("partition construction validates its nuclei") {
  CHECK_THROWS_AS(make_partition(SpaceDescriptor::euclidean(1), std::vector<Point>{}), Error);
  std::vector<Point> wrong = {Point::histogram({1.0}, 1.0)};
  CHECK_THROWS_AS(make_partition(SpaceDescriptor::euclidean(1), wrong), Error);
  std::vector<Point> wrong_dim = {test::vec({1.0, 2.0})};
  CHECK_THROWS_AS(make_partition(SpaceDescriptor::euclidean(1), wrong_dim), Error);
}

TEST_CASE("assignment matches cell_of pointwise") {
  Rng rng(808);
  std::vector<Point> nuclei;
  for (int i = 0; i < 6; ++i) nuclei.push_back(test::random_vec(rng, 2));
  VoronoiPartition part = make_partition(SpaceDescriptor::euclidean(2), nuclei);

  std::vector<Point> xs;
  for (int i = 0; i < 200; ++i) xs.push_back(test::random_vec(rng, 2));
  std::vector<std::size_t> cells = voronoi_assign(part, xs);
  REQUIRE(cells.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(cells[i] == part.cell_of(xs[i]));
}

TEST_CASE("every point lands in exactly the cell of a nearest nucleus") {
  Rng rng(606);
  SpaceDescriptor space = SpaceDescriptor::euclidean(2);
  std::vector<Point> nuclei;
  for (int i = 0; i < 8; ++i) nuclei.push_back(test::random_vec(rng, 2));
  VoronoiPartition part = make_partition(space, nuclei);

  for (int t = 0; t < 10000; ++t) {
    Point x = test::random_vec(rng, 2);
    std::size_t cell = part.cell_of(x);
    REQUIRE(cell < nuclei.size());
    double chosen = distance(space, x, nuclei[cell]);
    for (std::size_t j = 0; j < nuclei.size(); ++j) {
      double d = distance(space, x, nuclei[j]);
      CHECK(chosen <= d);
      if (j < cell) CHECK(d > chosen);  // earlier nuclei were strictly farther
    }
  }
}

TEST_CASE("cell-count schedule is floor(sqrt(n)) with a floor of one") {
  CHECK(default_k_schedule(1) == 1);
  CHECK(default_k_schedule(2) == 1);
  CHECK(default_k_schedule(3) == 1);
  CHECK(default_k_schedule(4) == 2);
  CHECK(default_k_schedule(99) == 9);
  CHECK(default_k_schedule(100) == 10);
  CHECK(default_k_schedule(101) == 10);
  CHECK(default_k_schedule(4096) == 64);
  CHECK(default_k_schedule(16384) == 128);
  CHECK(default_k_schedule(0) == 1);
}

TEST_CASE("schedule squares bracket n") {
  for (std::size_t n = 1; n <= 20000; ++n) {
    std::size_t k = default_k_schedule(n);
    CHECK(k * k <= n);
    CHECK((k + 1) * (k + 1) > n);
  }
}

TEST_CASE("schedule keeps k log(n) / n small for large n") {
  // Direct evaluation: the ratio is 0.12997 at n = 4096 and first drops
  // under 0.1 at n = 8192.
  CHECK(double(default_k_schedule(4096)) * std::log(4096.0) / 4096.0 <= 0.13);
  for (std::size_t n : {8192u, 16384u, 65536u, 1048576u}) {
    std::size_t k = default_k_schedule(n);
    double ratio = double(k) * std::log(double(n)) / double(n);
    CHECK(ratio <= 0.1);
  }
  // And it shrinks along the tail.
  double prev = 1.0;
  for (std::size_t n = 4096; n <= (std::size_t(1) << 20); n *= 2) {
    std::size_t k = default_k_schedule(n);
    double ratio = double(k) * std::log(double(n)) / double(n);
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_SUITE_END();
