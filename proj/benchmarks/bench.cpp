// Hot-path timings: enumeration, development, chart construction, and the
// exact linear algebra behind the area form.
#include <benchmark/benchmark.h>

#include "conesphere/catalog.hpp"
#include "conesphere/developing.hpp"
#include "conesphere/hermitian.hpp"
#include "conesphere/triangulation.hpp"

using namespace conesphere;

namespace {

void BM_enumerate(benchmark::State& state) {
  int max_t = int(state.range(0));
  size_t found = 0;
  for (auto _ : state) {
    std::vector<Triangulation> all = enumerate_positive(max_t);
    found = all.size();
    benchmark::DoNotOptimize(all);
  }
  state.counters["surfaces"] = double(found);
}
BENCHMARK(BM_enumerate)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_canonical_code(benchmark::State& state) {
  Triangulation t = icosahedron().triangulation;
  for (auto _ : state) {
    std::vector<int> code = t.canonical_code();
    benchmark::DoNotOptimize(code);
  }
}
BENCHMARK(BM_canonical_code)->Unit(benchmark::kMicrosecond);

void BM_cut_and_develop(benchmark::State& state) {
  Triangulation t = icosahedron().triangulation;
  SpanningTree tree = spanning_tree(t, 0);
  for (auto _ : state) {
    DevelopedDisk disk = cut_and_develop(t, tree);
    benchmark::DoNotOptimize(disk);
  }
}
BENCHMARK(BM_cut_and_develop)->Unit(benchmark::kMicrosecond);

void BM_moduli_chart(benchmark::State& state) {
  Triangulation t = icosahedron().triangulation;
  for (auto _ : state) {
    ModuliChart chart = moduli_chart(t, 0);
    benchmark::DoNotOptimize(chart);
  }
}
BENCHMARK(BM_moduli_chart)->Unit(benchmark::kMillisecond);

void BM_restrict_form(benchmark::State& state) {
  Triangulation t = icosahedron().triangulation;
  ModuliChart chart = moduli_chart(t, 0);
  Matrix ambient = area_form_ambient(t);
  for (auto _ : state) {
    Matrix h = restrict_form(ambient, chart);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_restrict_form)->Unit(benchmark::kMillisecond);

void BM_signature(benchmark::State& state) {
  Triangulation t = icosahedron().triangulation;
  Matrix h = restrict_form(area_form_ambient(t), moduli_chart(t, 0));
  for (auto _ : state) {
    Signature sig = signature(h);
    benchmark::DoNotOptimize(sig);
  }
}
BENCHMARK(BM_signature)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
