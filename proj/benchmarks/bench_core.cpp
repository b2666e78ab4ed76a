#include <benchmark/benchmark.h>

#include "wb/catalog.hpp"
#include "wb/cyclotomic.hpp"
#include "wb/group.hpp"

namespace {

void BM_CycMul(benchmark::State& state) {
  wb::CycNum a = wb::CycNum::root(12, 12, 1) + wb::CycNum(12, 3);
  wb::CycNum b = wb::CycNum::root(12, 12, 5) * wb::Rat(2, 7) - a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_CycMul);

void BM_CycInverse(benchmark::State& state) {
  wb::CycNum a = wb::CycNum(21, 1) + wb::CycNum::root(21, 21, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_CycInverse);

void BM_EnumerateDihedral(benchmark::State& state) {
  auto entry = wb::catalog_dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wb::enumerate_group(entry.generators));
  }
}
BENCHMARK(BM_EnumerateDihedral)->Arg(7)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
