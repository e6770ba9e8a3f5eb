#include "bcls/bianchi.hpp"
#include "bcls/fpgroup.hpp"
#include "bcls/modmat.hpp"
#include "bcls/pipeline.hpp"
#include "bcls/quadint.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bcls;

namespace {

void BM_IdealFactorization(benchmark::State& state) {
    auto f = quadint::make_field(7);
    auto I = quadint::parse_ideal(f, "(1+3*sqrt-7)/2");
    for (auto _ : state) benchmark::DoNotOptimize(quadint::factor_ideal(I));
}
BENCHMARK(BM_IdealFactorization);

void BM_ClassNumber(benchmark::State& state) {
    auto f = quadint::make_field(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(quadint::class_number(f));
}
BENCHMARK(BM_ClassNumber)->Arg(7)->Arg(71);

void BM_BuildGroup(benchmark::State& state) {
    auto f = quadint::make_field(7);
    auto I = quadint::parse_ideal(f, "(1+3*sqrt-7)/2");  // order 1536
    for (auto _ : state) benchmark::DoNotOptimize(modmat::build_group(I));
}
BENCHMARK(BM_BuildGroup);

void BM_CuspCount(benchmark::State& state) {
    auto f = quadint::make_field(7);
    auto I = quadint::parse_ideal(f, "(7+sqrt-7)/2");
    for (auto _ : state) benchmark::DoNotOptimize(modmat::cusp_count(f, I));
}
BENCHMARK(BM_CuspCount);

void BM_CosetEnumerationHlt(benchmark::State& state) {
    auto f = quadint::make_field(7);
    auto qp = bianchi::quotient_presentation(7, quadint::parse_ideal(f, "sqrt-7"));
    for (auto _ : state) {
        auto r = fpgroup::todd_coxeter(qp, {});
        if (!r.closed() || r.index != 168) state.SkipWithError("wrong index");
    }
}
BENCHMARK(BM_CosetEnumerationHlt);

void BM_CosetEnumerationFelsch(benchmark::State& state) {
    auto f = quadint::make_field(7);
    auto qp = bianchi::quotient_presentation(7, quadint::parse_ideal(f, "sqrt-7"));
    for (auto _ : state) {
        auto r = fpgroup::todd_coxeter(qp, {}, {}, fpgroup::Strategy::Felsch);
        if (!r.closed() || r.index != 168) state.SkipWithError("wrong index");
    }
}
BENCHMARK(BM_CosetEnumerationFelsch);

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    size_t n = state.range(0);
    fpgroup::IntMatrix m(n, n);
    for (auto& x : m.a) x = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(fpgroup::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(20)->Arg(50);

void BM_TorsionSearch(benchmark::State& state) {
    auto f = quadint::make_field(39);
    auto I = quadint::parse_ideal(f, "3, (3+sqrt-39)/2");
    for (auto _ : state) benchmark::DoNotOptimize(modmat::torsion_in_gamma(f, I));
}
BENCHMARK(BM_TorsionSearch);

void BM_CandidateLevels(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pipeline::candidate_levels(71));
}
BENCHMARK(BM_CandidateLevels);

}  // namespace

BENCHMARK_MAIN();
