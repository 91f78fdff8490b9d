#include "nfk/class_group.hpp"
#include "nfk/density.hpp"
#include "nfk/ideal.hpp"
#include "nfk/kummer.hpp"
#include "nfk/residue_ring.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

nfk::NumberField field(std::vector<long> poly, int ell = 0)
{
    return nfk::NumberField(nfk::IntPolynomial(std::vector<nfk::BigInt>(poly.begin(), poly.end())), ell);
}

void BM_Hnf(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-50, 50);
    nfk::IntMatrix m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(nfk::hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(3)->Arg(6)->Arg(12);

void BM_IdealProduct(benchmark::State& state)
{
    const nfk::NumberField k = field({-9, -1, 0, 1});
    const nfk::Ideal a = nfk::Ideal::from_generators(k, {{7, 3, -2}, {5, 1, 1}});
    const nfk::Ideal b = nfk::Ideal::from_element(k, {11, -4, 2});
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_IdealProduct);

void BM_FactorElement(benchmark::State& state)
{
    const nfk::NumberField k = field({-9, -1, 0, 1});
    const nfk::IntVec a{123, -45, 17};
    for (auto _ : state) benchmark::DoNotOptimize(nfk::factor_element(k, a));
}
BENCHMARK(BM_FactorElement);

void BM_CanonicalGenerator(benchmark::State& state)
{
    const nfk::NumberField k = field({-9, -1, 0, 1});
    const nfk::Ideal a = nfk::Ideal::from_element(k, {31, 7, -3});
    for (auto _ : state) benchmark::DoNotOptimize(nfk::canonical_generator(a));
}
BENCHMARK(BM_CanonicalGenerator);

void BM_ClassGroup(benchmark::State& state)
{
    const nfk::NumberField k = field({-9, -1, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(nfk::compute_class_group(k));
}
BENCHMARK(BM_ClassGroup)->Unit(benchmark::kMillisecond);

void BM_ResidueUnits(benchmark::State& state)
{
    const nfk::NumberField k = field({-9, -1, 0, 1});
    const nfk::Ideal m = nfk::Ideal::from_integer(k, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nfk::unit_group_mod_ideal(m));
}
BENCHMARK(BM_ResidueUnits)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RhoTable(benchmark::State& state)
{
    const nfk::KummerField kf(field({1, 1, 1}, 3), 3);
    for (auto _ : state) benchmark::DoNotOptimize(nfk::density_report(kf));
}
BENCHMARK(BM_RhoTable)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state)
{
    const nfk::KummerField kf(field({5, 0, 1}, 2), 2);
    for (auto _ : state) {
        std::size_t n = 0;
        kf.enumerate(state.range(0), [&](const nfk::ExtensionRecord&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_Enumerate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
