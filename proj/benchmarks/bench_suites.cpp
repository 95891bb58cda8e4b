#include <benchmark/benchmark.h>

#include "fockq/fockspace.hpp"
#include "fockq/operators.hpp"
#include "fockq/relations.hpp"
#include "fockq/statistics.hpp"

using namespace fockq;

namespace {

// Arguments: n, m, p.
Signature signature_of(const benchmark::State& state) {
  return Signature(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
}

void BM_Enumerate(benchmark::State& state) {
  const Signature sig = signature_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(sig).size());
  state.counters["dim"] = static_cast<double>(dimension(sig));
}
BENCHMARK(BM_Enumerate)->Args({2, 2, 4})->Args({4, 0, 8})->Args({3, 3, 6});

void BM_BuildExact(benchmark::State& state) {
  const FockBasis basis = enumerate(signature_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(build_cao_set(basis, ExactRing{}).rank());
}
BENCHMARK(BM_BuildExact)->Args({2, 2, 4})->Args({3, 1, 4});

void BM_BuildNumeric(benchmark::State& state) {
  const FockBasis basis = enumerate(signature_of(state));
  const NumericRing ring(Complex(0.5, 0.75));
  for (auto _ : state) benchmark::DoNotOptimize(build_cao_set(basis, ring, Convention::Orthonormal).rank());
}
BENCHMARK(BM_BuildNumeric)->Args({2, 2, 4})->Args({3, 1, 4});

void BM_ExactDeformedSuite(benchmark::State& state) {
  const FockBasis basis = enumerate(signature_of(state));
  const SuiteOptions opts{0.0, static_cast<unsigned>(state.range(3))};
  for (auto _ : state) {
    auto reports = verify_deformed_defining(basis, ExactRing{}, Convention::Unnormalized, opts);
    auto cw = verify_cartan_weyl(basis, ExactRing{}, Convention::Unnormalized, opts);
    benchmark::DoNotOptimize(reports.size() + cw.size());
  }
}
BENCHMARK(BM_ExactDeformedSuite)->Args({2, 2, 4, 1})->Args({2, 2, 4, 0})->Unit(benchmark::kMillisecond);

void BM_ClassicalSuites(benchmark::State& state) {
  const FockBasis basis = enumerate(signature_of(state));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_classical(basis).size() + verify_gl(basis).size() + verify_serre(basis).size());
  }
}
BENCHMARK(BM_ClassicalSuites)->Args({2, 2, 4})->Unit(benchmark::kMillisecond);

void BM_PartitionFunction(benchmark::State& state) {
  const FockBasis basis = enumerate(signature_of(state));
  EnergyLevels levels;
  for (int i = 1; i <= basis.signature().n(); ++i) levels.eps.push_back(0.5 * i);
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(basis, levels, 0.75).Z);
}
BENCHMARK(BM_PartitionFunction)->Args({3, 3, 6})->Args({4, 4, 4});

}  // namespace

BENCHMARK_MAIN();
