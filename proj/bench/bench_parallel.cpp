#include <benchmark/benchmark.h>

#include <random>

#include "hbtrace/betti.hpp"
#include "hbtrace/oracle.hpp"
#include "hbtrace/sweep.hpp"

using namespace hbtrace;

namespace {

std::vector<MonomialIdeal> betti_inputs() {
    Rng rng(17);
    std::vector<MonomialIdeal> out;
    while (out.size() < 8)
        if (auto I = random_generically_gorenstein_cm(rng, 5, 6, 3, 12)) out.push_back(*I);
    return out;
}

std::vector<MonomialIdeal> kernel_inputs() {
    std::mt19937_64 rng(18);
    std::vector<MonomialIdeal> out;
    for (int k = 0; k < 8; ++k) out.push_back(random_xy_ideal(rng, 5 + k % 3, 12));
    return out;
}

void BM_betti_serial(benchmark::State& state) {
    const auto inputs = betti_inputs();
    for (auto _ : state)
        for (const auto& I : inputs) benchmark::DoNotOptimize(betti_numbers_serial(I));
}

void BM_betti_parallel(benchmark::State& state) {
    const auto inputs = betti_inputs();
    for (auto _ : state)
        for (const auto& I : inputs) benchmark::DoNotOptimize(betti_numbers(I));
}

void BM_kernel_serial(benchmark::State& state) {
    const auto inputs = kernel_inputs();
    for (auto _ : state)
        for (const auto& I : inputs)
            benchmark::DoNotOptimize(kernel_generators_serial(hb_matrix_xy(I), I, default_degree_bound(I)));
}

void BM_kernel_parallel(benchmark::State& state) {
    const auto inputs = kernel_inputs();
    for (auto _ : state)
        for (const auto& I : inputs)
            benchmark::DoNotOptimize(kernel_generators(hb_matrix_xy(I), I, default_degree_bound(I)));
}

}  // namespace

BENCHMARK(BM_betti_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_betti_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
