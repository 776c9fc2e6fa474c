#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fll/extremal.hpp"
#include "fll/metric.hpp"
#include "fll/setcodes.hpp"
#include "fll/sweep.hpp"
#include "fll/word.hpp"

namespace {

fll::Word random_word(std::size_t n, unsigned q, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    std::vector<fll::Symbol> symbols(n);
    for (auto& s : symbols) s = static_cast<fll::Symbol>(pick(rng));
    return fll::Word(q, std::move(symbols));
}

void BM_ball_formula(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const fll::Word w = random_word(n, 2, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(fll::l1_size_formula(w.symbols().data(), n, 2));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ball_formula)->Arg(16)->Arg(256)->Arg(4096);

void BM_lcs(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const fll::Word x = random_word(n, 4, 11);
    const fll::Word y = random_word(n, 4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(fll::lcs_length(x, y));
}
BENCHMARK(BM_lcs)->Arg(16)->Arg(64)->Arg(256);

void BM_ball_enumeration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const fll::Word w = random_word(n, 2, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(fll::fll_ball(w, 1, false).enumerated_size);
}
BENCHMARK(BM_ball_enumeration)->Arg(8)->Arg(12);

void BM_sweep_formula(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    fll::SweepOptions options;
    options.workers = 1;
    for (auto _ : state) {
        auto s = fll::sweep(n, 2, 1, fll::SweepOracle::formula, options);
        benchmark::DoNotOptimize(s.max_size);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << n));
}
BENCHMARK(BM_sweep_formula)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_anticode_search(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto r = fll::search_maximal_anticodes(n, 2, 1);
        benchmark::DoNotOptimize(r.total_maximal);
    }
}
BENCHMARK(BM_anticode_search)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
