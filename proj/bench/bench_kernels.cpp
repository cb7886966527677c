#include <benchmark/benchmark.h>

#include "k3lat/disc_form.hpp"
#include "k3lat/enumerate.hpp"

using namespace k3lat;

namespace {

const Lattice& gamma16() {
  static const Lattice l = lattice_gamma16(-1);
  return l;
}

const DiscriminantForm& big_form() {
  static const DiscriminantForm f(
      direct_sum({lattice_U(2), lattice_U(2), lattice_U(2), lattice_nikulin(), lattice_nikulin()}));
  return f;
}

void BM_EnumerateSerial(benchmark::State& state) {
  Integer norm = -2 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vectors_of_norm_serial(gamma16(), norm));
}

void BM_EnumerateParallel(benchmark::State& state) {
  Integer norm = -2 * state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vectors_of_norm_parallel(gamma16(), norm));
}

void BM_QHistogramSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_histogram_serial(big_form()));
}

void BM_QHistogramParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_histogram_parallel(big_form()));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QHistogramSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QHistogramParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
