#include <benchmark/benchmark.h>

#include "levrecon/ball.hpp"
#include "levrecon/bounds.hpp"
#include "levrecon/harness.hpp"
#include "levrecon/majority.hpp"
#include "levrecon/rng.hpp"

using namespace levrecon;

static void BM_Distance(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(1);
    Word x(n), y(n);
    for (int i = 1; i <= n; ++i) {
        if (rng.next_u64() & 1) x.flip(i);
        if (rng.next_u64() & 1) y.flip(i);
    }
    for (auto _ : state) benchmark::DoNotOptimize(distance(x, y));
}
BENCHMARK(BM_Distance)->Arg(28)->Arg(512);

static void BM_BallEnumeration(benchmark::State& state) {
    const Word c(20);
    for (auto _ : state) {
        long count = 0;
        for_each_in_ball(c, 3, [&](const Word&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_BallEnumeration);

static void BM_BallSample(benchmark::State& state) {
    const BallSampler sampler(28, 5);
    const Word c(28);
    Rng rng(7);
    for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(c, rng));
}
BENCHMARK(BM_BallSample);

static void BM_MajorityVote(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    Rng rng(5);
    const BallSampler sampler(28, 5);
    const Word x(28);
    std::vector<Word> outputs;
    for (int i = 0; i < N; ++i) outputs.push_back(sampler.sample(x, rng));
    for (auto _ : state) benchmark::DoNotOptimize(majority_vote(outputs));
}
BENCHMARK(BM_MajorityVote)->Arg(11)->Arg(101);

static void BM_ChannelCountNh(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(bounds::channel_count_nh(64, 3, 6, 4, bounds::NhVariant::Unprimed));
}
BENCHMARK(BM_ChannelCountNh);

static void BM_McTrialBlock(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(harness::mc_majority_equal(28, 5, 11, 1000, 99));
}
BENCHMARK(BM_McTrialBlock);
