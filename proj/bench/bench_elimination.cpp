#include <benchmark/benchmark.h>
#include <omp.h>

#include "rmlab/campaign.hpp"
#include "rmlab/elimination.hpp"
#include "rmlab/model.hpp"
#include "rmlab/reference/naive_elimination.hpp"

using namespace rmlab;

namespace {

BitMatrix sample(std::size_t n) {
    ModelConfig cfg;
    cfg.n = n;
    cfg.master_seed = 7;
    return sample_gf2(cfg, 0).matrix;
}

void BM_packed_rank(benchmark::State& state) {
    const BitMatrix m = sample(static_cast<std::size_t>(state.range(0)));
    omp_set_num_threads(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2_rank(m));
    }
}

void BM_packed_nullspace(benchmark::State& state) {
    const BitMatrix m = sample(static_cast<std::size_t>(state.range(0)));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2_rank_nullspace(m).rank);
    }
    omp_set_num_threads(omp_get_num_procs());
}

void BM_naive_rank(benchmark::State& state) {
    const auto dense = reference::to_dense(sample(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::naive_gf2_rank(dense));
    }
}

void BM_campaign(benchmark::State& state) {
    ModelConfig cfg;
    cfg.n = 500;
    cfg.master_seed = 7;
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_campaign(cfg, 64, workers).size());
    }
    state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK(BM_packed_rank)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packed_nullspace)->Args({500, 1})->Args({2000, 1})->Args({2000, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_naive_rank)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_campaign)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
