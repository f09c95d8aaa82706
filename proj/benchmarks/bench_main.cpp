#include <benchmark/benchmark.h>

#include "kneser/construct.hpp"
#include "kneser/decomposition.hpp"
#include "kneser/homology.hpp"
#include "kneser/normal.hpp"
#include "kneser/patch_corpus.hpp"
#include "kneser/skeleton_push.hpp"

using namespace kneser;

namespace {

Triangulation sum_of(int summands) {
  Triangulation acc = projective_space();
  for (int i = 1; i < summands; ++i) acc = connected_sum(acc, i % 2 ? lens_space_5_2() : projective_space());
  return acc;
}

void BM_Enumerate(benchmark::State& state) {
  const auto tri = sum_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertex_solutions(tri));
  state.counters["ntet"] = tri.size();
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnumerateBoundary4Simplex(benchmark::State& state) {
  const auto tri = boundary_4simplex();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertex_solutions(tri));
}
BENCHMARK(BM_EnumerateBoundary4Simplex)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto tri = sum_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(tri));
  state.counters["ntet"] = tri.size();
}
BENCHMARK(BM_Decompose)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const auto tri = sum_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(tri, 1));
}
BENCHMARK(BM_Homology)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ProjectedArea(benchmark::State& state) {
  const auto config = ProjectionConfig::standard();
  const auto patch = icosphere({0, 0, 0}, 1.5 * config.r, static_cast<int>(state.range(0)));
  const Vec3 u{0.3 * config.r, -0.1 * config.r, 0.2 * config.r};
  for (auto _ : state) benchmark::DoNotOptimize(projected_area(config, u, patch));
  state.counters["triangles"] = static_cast<double>(patch.triangles.size());
}
BENCHMARK(BM_ProjectedArea)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_SampleDilatations(benchmark::State& state) {
  auto config = ProjectionConfig::standard();
  config.samples = static_cast<std::size_t>(state.range(0));
  const auto patch = corpus_patches()[2].second;
  for (auto _ : state) benchmark::DoNotOptimize(sample_dilatations(config, patch));
}
BENCHMARK(BM_SampleDilatations)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CollapseExtract(benchmark::State& state) {
  const auto inst = two_sphere_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(collapse_extract(inst.mesh, inst.labels));
}
BENCHMARK(BM_CollapseExtract)->Arg(6)->Arg(600)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
