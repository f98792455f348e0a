// Serial reference vs OpenMP kernel timings for the four survey-style
// entry points.  Run with --benchmark_min_time=0.05 for a quick pass.

#include <benchmark/benchmark.h>

#include <vector>

#include "wps/curves.hpp"
#include "wps/hypersurface.hpp"
#include "wps/orbifold.hpp"
#include "wps/weights.hpp"

using wps::BigInt;
using wps::Rational;

namespace {

const wps::SurveyMode kExhaustive{};

void BM_density_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wps::density_survey_serial(4, 2, 20, kExhaustive));
}

void BM_density_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wps::density_survey(4, 2, 20, kExhaustive, 0));
}

const wps::WeightSystem& mo_system() {
    static const auto ws =
        wps::solve_weights(wps::make_exponent_tuple(std::vector<long long>{2, 3, 4, 5, 6, 7, 8, 9}));
    return ws;
}

void BM_milnor_orlik_serial(benchmark::State& state) {
    const auto& ws = mo_system();
    for (auto _ : state)
        benchmark::DoNotOptimize(wps::milnor_orlik_rank_serial(ws.w, ws.d));
}

void BM_milnor_orlik_parallel(benchmark::State& state) {
    const auto& ws = mo_system();
    for (auto _ : state)
        benchmark::DoNotOptimize(wps::milnor_orlik_rank(ws.w, ws.d, 0));
}

void BM_defect_tuples_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            wps::enumerate_defect_tuples_serial({4}, 300, Rational(3), false, true));
}

void BM_defect_tuples_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            wps::enumerate_defect_tuples({4}, 300, Rational(3), false, true, 0));
}

void BM_excluded_family_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wps::verify_excluded_family_serial(60));
}

void BM_excluded_family_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wps::verify_excluded_family(60, 0));
}

BENCHMARK(BM_density_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_density_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_milnor_orlik_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_milnor_orlik_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_defect_tuples_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_defect_tuples_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_excluded_family_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_excluded_family_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
