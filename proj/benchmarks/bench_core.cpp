#include <random>

#include <benchmark/benchmark.h>

#include "fsb/classify.hpp"
#include "fsb/complexes.hpp"
#include "fsb/exactlin.hpp"
#include "fsb/groups.hpp"

using namespace fsb;

namespace {

Mat random_int_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat a(Ring::integers(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, Int(static_cast<long>(rng() % 21) - 10));
  return a;
}

void BM_SmithZ(benchmark::State& st) {
  Mat a = random_int_matrix(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithZ)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_FormDataZ(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  FormedSpace a = x_power(n, Ring::integers()).transport(random_unimodular(n, Ring::integers(), 3, 4 * n));
  for (auto _ : st) benchmark::DoNotOptimize(form_data(a));
}
BENCHMARK(BM_FormDataZ)->Arg(4)->Arg(8)->Arg(12);

void BM_BuildD(benchmark::State& st) {
  FormedSpace a = x_power(static_cast<std::size_t>(st.range(0)), Ring::mod(2));
  for (auto _ : st) benchmark::DoNotOptimize(build_complex(a, ComplexKind::D, 2));
}
BENCHMARK(BM_BuildD)->Arg(6)->Arg(8);

void BM_HomologyB(benchmark::State& st) {
  FormedSpace a = x_power(static_cast<std::size_t>(st.range(0)), Ring::mod(2));
  SimplicialComplex cx = build_complex(a, ComplexKind::B, 3);
  for (auto _ : st) benchmark::DoNotOptimize(reduced_homology(cx, 2));
}
BENCHMARK(BM_HomologyB)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AutXPower(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(aut_x_power(static_cast<std::size_t>(st.range(0)), Ring::mod(2)));
}
BENCHMARK(BM_AutXPower)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
