#include <benchmark/benchmark.h>

#include "frechet/rng.hpp"
#include "frechet/sampler.hpp"
#include "frechet/space.hpp"

using namespace frechet;

static void BM_euclidean_distance(benchmark::State& state) {
  auto d = static_cast<std::size_t>(state.range(0));
  SpaceDescriptor space = SpaceDescriptor::euclidean(d);
  Sampler sampler(SamplerSpec::gaussian_vector(std::vector<double>(d, 0.0), 1.0), 1);
  Point a = sampler.draw_one();
  Point b = sampler.draw_one();
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance(space, a, b));
  }
}
BENCHMARK(BM_euclidean_distance)->Arg(2)->Arg(16)->Arg(256);

static void BM_tv_distance(benchmark::State& state) {
  auto bins = static_cast<std::size_t>(state.range(0));
  SpaceDescriptor space =
      SpaceDescriptor::density_grid(bins, 1.0 / static_cast<double>(bins),
                                    MetricId::total_variation);
  std::vector<double> left(bins, 0.0), right(bins, 0.0);
  for (std::size_t i = 0; i < bins / 2; ++i) left[i] = 2.0;
  for (std::size_t i = bins / 2; i < bins; ++i) right[i] = 2.0;
  Point a = Point::histogram(left, 1.0 / static_cast<double>(bins));
  Point b = Point::histogram(right, 1.0 / static_cast<double>(bins));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance(space, a, b));
  }
}
BENCHMARK(BM_tv_distance)->Arg(16)->Arg(128);

static void BM_frobenius_distance(benchmark::State& state) {
  auto nodes = static_cast<std::size_t>(state.range(0));
  SpaceDescriptor space = SpaceDescriptor::spd_matrix(nodes);
  Sampler sampler(SamplerSpec::er_graph_laplacian(nodes, 0.3), 1);
  Point a = sampler.draw_one();
  Point b = sampler.draw_one();
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance(space, a, b));
  }
}
BENCHMARK(BM_frobenius_distance)->Arg(8)->Arg(32);
