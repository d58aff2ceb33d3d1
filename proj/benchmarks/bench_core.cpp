#include <benchmark/benchmark.h>

#include "dnc/deformation.hpp"
#include "dnc/normkit.hpp"
#include "dnc/random.hpp"

using namespace dnc;

namespace {

Signature bench_signature(int n) {
    Rng rng(static_cast<std::uint64_t>(n));
    return Signature(n, n / 2, random_angles(n, rng));
}

void BM_Normalize(benchmark::State& state) {
    auto sig = bench_signature(4);
    Rng rng(1);
    std::vector<Word> words;
    for (int i = 0; i < 256; ++i) words.push_back(random_word(sig, static_cast<std::size_t>(state.range(0)), rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normalize(sig, words[i++ % words.size()]));
}
BENCHMARK(BM_Normalize)->Arg(6)->Arg(12)->Arg(24);

void BM_Mul(benchmark::State& state) {
    auto sig = bench_signature(4);
    Rng rng(2);
    auto x = random_element(sig, {3, 3, 3}, static_cast<std::size_t>(state.range(0)), rng);
    auto y = random_element(sig, {3, 3, 3}, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(mul(sig, x, y));
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(16);

void BM_ApplyElement(benchmark::State& state) {
    auto sig = bench_signature(3);
    Rng rng(3);
    auto x = random_element(sig, {2, 2, 2}, 8, rng);
    Truncation trunc(8, 2);
    auto basis = trunc.band_basis(sig);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_element(sig, trunc, x, ExactState::basis(basis[i++ % basis.size()])));
}
BENCHMARK(BM_ApplyElement);

void BM_Extract(benchmark::State& state) {
    auto sig = bench_signature(3);
    Rng rng(4);
    ExponentBox box{3, 3, 3};
    Truncation trunc(8, 0);
    auto x = random_element(sig, box, 6, rng);
    StateOracle<PhasePolynomial> oracle = [&](const MultiIndex& k) {
        return apply_element(sig, trunc, x, ExactState::basis(k));
    };
    for (auto _ : state) benchmark::DoNotOptimize(extract_coefficients(sig, trunc, oracle, box));
}
BENCHMARK(BM_Extract)->Unit(benchmark::kMillisecond);

void BM_Intertwiner(benchmark::State& state) {
    DeformationContext ctx(bench_signature(static_cast<int>(state.range(0))));
    Truncation trunc(6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_intertwiner(ctx, trunc));
}
BENCHMARK(BM_Intertwiner)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PalNorm(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    Rng rng(5);
    Signature sig(l, l, random_angles(l, rng));
    auto x = random_projection_element(sig, 4, 8, rng);
    for (auto _ : state) benchmark::DoNotOptimize(pal_norm(sig, x));
}
BENCHMARK(BM_PalNorm)->Arg(1)->Arg(3);

} // namespace

BENCHMARK_MAIN();
