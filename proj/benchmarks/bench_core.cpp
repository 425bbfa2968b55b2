#include <benchmark/benchmark.h>

#include "octobil/catalog.hpp"
#include "octobil/element.hpp"
#include "octobil/linalg.hpp"
#include "octobil/restriction.hpp"
#include "octobil/rng.hpp"
#include "octobil/verification.hpp"

using namespace octobil;

namespace {

std::vector<Rational> sample(CounterRng& rng, int dim, int64_t bound = 5) {
    std::vector<Rational> v(static_cast<size_t>(dim));
    for (auto& c : v) c = Rational(static_cast<long long>(rng.uniform(-bound, bound)));
    return v;
}

void AlgebraMul(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    CounterRng rng(1, 0);
    const Element x(level, sample(rng, level));
    const Element y(level, sample(rng, level));
    for (auto _ : state) {
        auto z = mul(x, y);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(AlgebraMul)->Arg(2)->Arg(4)->Arg(8);

void MapEvaluate(benchmark::State& state, const char* id) {
    const auto m = builtin(id);
    CounterRng rng(2, 0);
    const auto x = sample(rng, m->r());
    const auto y = sample(rng, m->s());
    for (auto _ : state) {
        auto v = m->evaluate(x, y);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK_CAPTURE(MapEvaluate, octonion_mul, "octonion_mul");
BENCHMARK_CAPTURE(MapEvaluate, lam_map, "lam_map");
BENCHMARK_CAPTURE(MapEvaluate, main_f, "main_f");

void TensorApply(benchmark::State& state) {
    const auto m = builtin("main_f");
    const Tensor& t = m->tensor();
    CounterRng rng(3, 0);
    const auto x = sample(rng, m->r());
    const auto y = sample(rng, m->s());
    for (auto _ : state) {
        auto v = t.apply(x, y);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(TensorApply);

void FixedMatrixRank(benchmark::State& state) {
    const auto m = builtin("main_f");
    CounterRng rng(4, 0);
    const auto x = sample(rng, m->r());
    const Matrix left = m->fixed_left_matrix(x);
    for (auto _ : state) {
        int r = rank(left);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(FixedMatrixRank);

void ImageSpanMainF(benchmark::State& state) {
    const auto m = builtin("main_f");
    m->tensor();  // cached outside the loop
    for (auto _ : state) {
        auto span = image_span(*m);
        benchmark::DoNotOptimize(span.dimension);
    }
}
BENCHMARK(ImageSpanMainF)->Unit(benchmark::kMillisecond);

void FuzzThroughput(benchmark::State& state) {
    const auto m = builtin("main_f");
    uint64_t seed = 0;
    for (auto _ : state) {
        auto rep = fuzz_nonsingularity(*m, 64, seed++, 5, 1);
        benchmark::DoNotOptimize(rep.failures.size());
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(FuzzThroughput)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
