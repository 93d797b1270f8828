#include <benchmark/benchmark.h>

#include <edgewise/edgewise.hpp>

using namespace edgewise;

static void BuildComplex(benchmark::State& state) {
  const Subdivision t(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(t.build());
  state.counters["facets"] = static_cast<double>(t.facet_count());
}
BENCHMARK(BuildComplex)->Args({4, 6})->Args({5, 6})->Args({6, 5})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void AscentCount(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(h_by_ascents(k, q));
}
BENCHMARK(AscentCount)->Args({6, 6})->Args({8, 5})->Unit(benchmark::kMillisecond);

static void ClosedFormH(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_closed_form(k, 10));
    benchmark::DoNotOptimize(h_by_polynomial(k, 10));
    benchmark::DoNotOptimize(h_by_recursion(k, 10));
  }
}
BENCHMARK(ClosedFormH)->Arg(8)->Arg(16)->Arg(32);

static void FVector(benchmark::State& state) {
  const auto K = Subdivision(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))).build();
  for (auto _ : state) {
    SimplicialComplex copy(K.facets());
    benchmark::DoNotOptimize(copy.f_vector());
  }
}
BENCHMARK(FVector)->Args({4, 6})->Args({5, 5})->Unit(benchmark::kMillisecond);

static void GlobalShelling(benchmark::State& state) {
  const Subdivision t(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(shelling_order(t).certificate.valid);
}
BENCHMARK(GlobalShelling)->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void VertexLinkIso(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Subdivision t(k, k + 1);
  LatticeVertex v(k - 1);
  for (int i = 0; i < k - 1; ++i) v[i] = i + 1;
  for (auto _ : state) benchmark::DoNotOptimize(t.link_of_vertex(v, true).verified);
}
BENCHMARK(VertexLinkIso)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void KLambdaDistinct(benchmark::State& state) {
  const auto ps = partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int iso = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) iso += are_isomorphic(k_lambda(ps[i]), k_lambda(ps[j]));
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(KLambdaDistinct)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void StarCluster(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Subdivision t(k, k + 3);
  for (auto _ : state) benchmark::DoNotOptimize(sc_shelling_and_h(t, default_star_cluster_base(k, k + 3)).certificate.valid);
}
BENCHMARK(StarCluster)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void HMatrix(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_matrix(k));
}
BENCHMARK(HMatrix)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
