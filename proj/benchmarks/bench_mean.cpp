#include <benchmark/benchmark.h>

#include "frechet/mean.hpp"
#include "frechet/sampler.hpp"

using namespace frechet;

// n learn points x n prototypes: the n^2 loss evaluations of one fit.
static void BM_quantized_mean(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  LossSpec spec = LossSpec::squared_norm(SpaceDescriptor::euclidean(1));
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 42);
  std::vector<Point> learn = sampler.draw(n);
  std::vector<Point> prototypes = sampler.draw(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantized_frechet_mean(spec, learn, prototypes));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_quantized_mean)->Arg(64)->Arg(256)->Arg(1024)->Complexity(benchmark::oNSquared);

static void BM_split_sample(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Sampler sampler(SamplerSpec::uniform_scalar(0.0, 1.0), 42);
  std::vector<Point> pool = sampler.draw(2 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_sample(pool, 7u));
  }
}
BENCHMARK(BM_split_sample)->Arg(1024)->Arg(4096);
