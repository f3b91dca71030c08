#include <benchmark/benchmark.h>

#include "modhodge/atlas.hpp"
#include "modhodge/blowup.hpp"
#include "modhodge/cech.hpp"
#include "modhodge/cube.hpp"
#include "modhodge/form_module.hpp"
#include "modhodge/kunneth.hpp"
#include "modhodge/linalg.hpp"

namespace {

using namespace modhodge;

void BM_CohomologyDims(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int d = -6; d <= 6; ++d) benchmark::DoNotOptimize(cohomologyDims(n, d));
}
BENCHMARK(BM_CohomologyDims)->DenseRange(1, 3);

void BM_RationalRank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m[i][j] = makeRational(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RationalRank)->RangeMultiplier(2)->Range(4, 32);

void BM_CubeDegreeAnalysis(benchmark::State& state) {
  const GradedComplex complex = cubeComplex(ModulusPair({2, 1}), static_cast<int>(state.range(0)), FormKind::MOmega);
  for (auto _ : state) benchmark::DoNotOptimize(complex.analyze(ExponentVector{-1, 2, 0}));
}
BENCHMARK(BM_CubeDegreeAnalysis)->DenseRange(0, 3);

void BM_BlowupCheck(benchmark::State& state) {
  const BlowupSetup setup(IndexSet::of({0, 1, 2}), ModulusPair({2, 0, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(verifyBlowupInvariance(setup, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BlowupCheck)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const ModulusPair pair({3, 1, 0});
  const LogForm w = LogForm::parse("(x1^-2*x2 + x3^2) * dlog(x1) ^ d(x3) + (x1^-1) * d(x2) ^ d(x3)", pair);
  const auto spec = FormModuleSpec::mOmega(pair, 2);
  for (auto _ : state) benchmark::DoNotOptimize(member(w, spec));
}
BENCHMARK(BM_Membership);

void BM_Kunneth(benchmark::State& state) {
  const ModulusPair a({2, 0, 1}), b({1, 3, 0});
  for (auto _ : state) benchmark::DoNotOptimize(kunnethCheck(a, b, 6));
}
BENCHMARK(BM_Kunneth)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
