#include "motives/bundles.hpp"
#include "motives/closed.hpp"
#include "motives/curve.hpp"
#include "motives/io.hpp"
#include "motives/root_datum.hpp"
#include "motives/series.hpp"
#include "motives/weyl.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace motives;

namespace {

GradedMotiveSeries dense_series(int genus, int terms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> lexp(-6, 6);
    std::uniform_int_distribution<int> aexp(0, 2);
    std::uniform_int_distribution<int> num(-9, 9);
    GradedMotiveSeries s;
    for (int i = 0; i < terms; ++i) {
        std::vector<int> a(static_cast<size_t>(2 * genus));
        for (auto& e : a) e = aexp(rng);
        s.add_term(MotiveMonomial(lexp(rng), a), Rational(num(rng), 1 + i % 3));
    }
    return s;
}

void bm_series_mul(benchmark::State& state) {
    GradedMotiveSeries x = dense_series(2, static_cast<int>(state.range(0)), 11);
    GradedMotiveSeries y = dense_series(2, static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(ring_mul(x, y));
}
BENCHMARK(bm_series_mul)->Arg(32)->Arg(128);

void bm_expand_classifying(benchmark::State& state) {
    ClosedMotive bg = classifying_motive(build_root_datum("E6"));
    int floor = static_cast<int>(-state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand(bg, floor));
}
BENCHMARK(bm_expand_classifying)->Arg(100)->Arg(160);

void bm_weyl_bfs(benchmark::State& state) {
    RootDatum rd = build_root_datum(state.range(0) == 0 ? "B3" : "D4");
    for (auto _ : state) benchmark::DoNotOptimize(weyl_enumerate(rd, 1000000));
}
BENCHMARK(bm_weyl_bfs)->Arg(0)->Arg(1);

void bm_affine_bfs(benchmark::State& state) {
    RootDatum rd = build_root_datum("A2");
    for (auto _ : state)
        benchmark::DoNotOptimize(affine_poincare(rd, static_cast<int>(state.range(0)),
                                                 PoincareMethod::Bfs));
}
BENCHMARK(bm_affine_bfs)->Arg(8)->Arg(12);

void bm_p1_stratification(benchmark::State& state) {
    RootDatum rd = build_root_datum("A2");
    int floor = static_cast<int>(-state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(p1_stratification_motive(rd, floor));
}
BENCHMARK(bm_p1_stratification)->Arg(16)->Arg(24);

void bm_json_roundtrip(benchmark::State& state) {
    std::string text = series_to_json(dense_series(3, 256, 23));
    for (auto _ : state) benchmark::DoNotOptimize(series_to_json(series_from_json(text)));
}
BENCHMARK(bm_json_roundtrip);

}  // namespace

BENCHMARK_MAIN();
