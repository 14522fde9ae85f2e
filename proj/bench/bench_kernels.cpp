#include "tworay/monomials.hpp"
#include "tworay/scenario.hpp"

#include <benchmark/benchmark.h>

using namespace tworay;

namespace {

const cli::ScenarioFile& paper_x() {
    static const auto s = cli::builtin("paper-X");
    return s;
}

// Degree far enough out that the enumeration has real work to split.
const cones::Vec2 kBig{-16, 16};

void BM_enumerate_serial(benchmark::State& st) {
    const auto g = paper_x().grading();
    for (auto _ : st) benchmark::DoNotOptimize(monomials::enumerate_monomials_serial(g, kBig));
}

void BM_enumerate_parallel(benchmark::State& st) {
    const auto g = paper_x().grading();
    for (auto _ : st) benchmark::DoNotOptimize(monomials::enumerate_monomials(g, kBig));
}

void BM_baselocus_serial(benchmark::State& st) {
    const auto m = paper_x().model();
    const auto s = paper_x().system();
    for (auto _ : st) benchmark::DoNotOptimize(monomials::base_locus_serial(m, s));
}

void BM_baselocus_parallel(benchmark::State& st) {
    const auto m = paper_x().model();
    const auto s = paper_x().system();
    for (auto _ : st) benchmark::DoNotOptimize(monomials::base_locus(m, s));
}

} // namespace

BENCHMARK(BM_enumerate_serial);
BENCHMARK(BM_enumerate_parallel);
BENCHMARK(BM_baselocus_serial);
BENCHMARK(BM_baselocus_parallel);

BENCHMARK_MAIN();
