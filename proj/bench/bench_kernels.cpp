// Serial reference kernels against their OpenMP twins.

#include "codecert/canon.hpp"
#include "codecert/classify20.hpp"
#include "codecert/golay.hpp"
#include "codecert/kernels.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace codecert;

const Code& golay24() {
    static const Code c = golay::build_extended_golay().to_code();
    return c;
}

void BM_histogram_serial(benchmark::State& state) {
    const Code& c = golay24();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::pair_distance_histogram(c.words(), c.length()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size() * c.size()));
}

void BM_histogram_parallel(benchmark::State& state) {
    const Code& c = golay24();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::pair_distance_histogram(c.words(), c.length()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size() * c.size()));
}

void BM_min_distance_serial(benchmark::State& state) {
    const Code& c = golay24();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::min_pair_distance(c.words(), c.length()));
}

void BM_min_distance_parallel(benchmark::State& state) {
    const Code& c = golay24();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::min_pair_distance(c.words(), c.length()));
}

std::vector<Code> flip_batch(std::size_t count) {
    static const classify20::FlipBase base = classify20::build_base();
    std::vector<Code> out;
    for (std::size_t m = 0; m < count; ++m) out.push_back(classify20::flip_code(base, static_cast<std::uint16_t>(m * 2654435761u)));
    return out;
}

void BM_partition_serial(benchmark::State& state) {
    const auto codes = flip_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::partition_classes(codes));
}

void BM_partition_parallel(benchmark::State& state) {
    const auto codes = flip_batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parallel::partition_classes(codes));
}

void BM_verify_all_serial(benchmark::State& state) {
    const classify20::FlipBase base = classify20::build_base();
    for (auto _ : state) benchmark::DoNotOptimize(classify20::serial::verify_all(base));
}

void BM_verify_all_parallel(benchmark::State& state) {
    const classify20::FlipBase base = classify20::build_base();
    for (auto _ : state) benchmark::DoNotOptimize(classify20::parallel::verify_all(base));
}

}  // namespace

BENCHMARK(BM_histogram_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_histogram_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_distance_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_min_distance_parallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_partition_serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partition_parallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_all_serial)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK(BM_verify_all_parallel)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
