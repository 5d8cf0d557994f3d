#include <benchmark/benchmark.h>

#include <numeric>

#include "algcut/algcut.hpp"

using namespace algcut;

namespace {

AmbientWeights spread(std::size_t n)
{
    std::vector<Weight> w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = static_cast<Weight>(3 * i) - static_cast<Weight>(n);
    return AmbientWeights(w);
}

void BM_SeriesInvert(benchmark::State& state)
{
    const auto order = static_cast<LaurentSeries::Exponent>(state.range(0));
    auto s = series_exp(Rational(-3), order);
    s = s - LaurentSeries::monomial(Rational(1), 0, order); // e^{-3t} - 1, valuation 1
    for (auto _ : state)
        benchmark::DoNotOptimize(series_invert(s));
}
BENCHMARK(BM_SeriesInvert)->Arg(8)->Arg(16)->Arg(32);

void BM_ToddGenus(benchmark::State& state)
{
    const auto w = spread(static_cast<std::size_t>(state.range(0)));
    const auto upper = cut_fixed_inventory(w, Level(1, 2)).upper_fixed;
    for (auto _ : state)
        benchmark::DoNotOptimize(todd_genus(upper, default_todd_order(upper)));
}
BENCHMARK(BM_ToddGenus)->DenseRange(2, 8, 2);

void BM_TotalResidue(benchmark::State& state)
{
    const auto w = spread(static_cast<std::size_t>(state.range(0)));
    const auto h = EquivariantClass::h(w);
    const auto t = EquivariantClass::t(w);
    const auto c = (h + t).pow(static_cast<unsigned>(w.size() - 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(total_residue(w, c));
}
BENCHMARK(BM_TotalResidue)->DenseRange(3, 9, 2);

void BM_InvariantMonomial(benchmark::State& state)
{
    const AmbientWeights w({3, 5, 7, 11}); // no invariant monomial: full search
    const auto p = SupportPattern::from_mask(0b1111);
    const auto d = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant_monomial_exists(p, w, d));
}
BENCHMARK(BM_InvariantMonomial)->Arg(4)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
