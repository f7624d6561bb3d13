#include <benchmark/benchmark.h>

#include "kstep/observer.hpp"
#include "kstep/oracle.hpp"
#include "kstep/strong.hpp"
#include "kstep/weak.hpp"

namespace {

kstep::Des instance(std::size_t n, bool deterministic, std::uint64_t seed) {
    kstep::oracle::GeneratorParams p;
    p.state_count = n;
    p.observable_event_count = 3;
    p.unobservable_event_count = 1;
    p.transition_density = deterministic ? 0.7 : 0.8;
    p.secret_fraction = 0.4;
    p.deterministic = deterministic;
    p.rng_seed = seed;
    return kstep::oracle::random_des(p);
}

kstep::KBound k_of(std::int64_t arg) {
    return arg < 0 ? kstep::KBound::infinite() : kstep::KBound::finite(static_cast<std::uint64_t>(arg));
}

// Same n = 14 system for every k; arg -1 stands for k = inf.
void BM_VerifyWeakAcrossK(benchmark::State& state) {
    const auto des = instance(14, false, 6);
    const auto k = k_of(state.range(0));
    std::uint64_t explored = 0;
    for (auto _ : state) {
        auto v = kstep::verify_weak(des, k);
        explored = v.stats.product_states_explored;
        benchmark::DoNotOptimize(v);
    }
    state.counters["explored"] = static_cast<double>(explored);
}
BENCHMARK(BM_VerifyWeakAcrossK)->Arg(0)->Arg(1)->Arg(2)->Arg(1000)->Arg(1000000)->Arg(-1);

void BM_Observer(benchmark::State& state) {
    const auto des = instance(static_cast<std::size_t>(state.range(0)), false, 11);
    for (auto _ : state) benchmark::DoNotOptimize(kstep::observer(des));
}
BENCHMARK(BM_Observer)->DenseRange(8, 20, 4);

void BM_VerifyStrong(benchmark::State& state) {
    const auto des = instance(static_cast<std::size_t>(state.range(0)), true, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kstep::verify_strong(des, kstep::KBound::finite(2)));
}
BENCHMARK(BM_VerifyStrong)->DenseRange(8, 20, 4);

}  // namespace

BENCHMARK_MAIN();
