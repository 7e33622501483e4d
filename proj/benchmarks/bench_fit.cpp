#include <benchmark/benchmark.h>

#include "frechet/piecewise.hpp"
#include "frechet/sampler.hpp"
#include "frechet/voronoi.hpp"

using namespace frechet;

static void BM_piecewise_fit(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  LossSpec spec = LossSpec::squared_norm(SpaceDescriptor::euclidean(1));
  SamplerSpec pair = SamplerSpec::regression_pair(SamplerSpec::uniform_scalar(0.0, 1.0),
                                                  LinkSpec::identity(), NoiseSpec::uniform(0.1));
  Sampler sampler(pair, 42);
  std::vector<LabeledPoint> data = sampler.draw_pairs(n);
  std::vector<Point> prototypes;
  prototypes.reserve(n);
  for (const LabeledPoint& p : sampler.draw_pairs(n)) prototypes.push_back(p.y);
  Sampler xs(SamplerSpec::uniform_scalar(0.0, 1.0), 7);
  VoronoiPartition partition =
      make_partition(SpaceDescriptor::euclidean(1), xs.draw(default_k_schedule(n)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_piecewise(spec, partition, data, prototypes));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_piecewise_fit)->Arg(64)->Arg(256)->Arg(1024)->Complexity(benchmark::oNSquared);

static void BM_voronoi_assign(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  Sampler xs(SamplerSpec::uniform_scalar(0.0, 1.0), 7);
  VoronoiPartition partition = make_partition(SpaceDescriptor::euclidean(1), xs.draw(k));
  std::vector<Point> queries = xs.draw(1024);
  for (auto _ : state) {
    benchmark::DoNotOptimize(voronoi_assign(partition, queries));
  }
}
BENCHMARK(BM_voronoi_assign)->Arg(8)->Arg(64);
