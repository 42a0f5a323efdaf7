#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "binom/pipeline.hpp"

using namespace binom;

namespace {

IdealHandle deep(int n) {
    RingPtr R = Ring::make({"x", "y", "z"});
    return IdealHandle(R, {parse_poly("(x - z)^2", R),
                           parse_poly(std::to_string(n) + "*x - y - " + std::to_string(n - 1) + "*z", R)});
}

IdealHandle katsura3() {
    RingPtr R = Ring::make({"a", "b", "c", "d"});
    std::vector<std::string> g = {"a + 2*b + 2*c + 2*d - 1", "a^2 + 2*b^2 + 2*c^2 + 2*d^2 - a",
                                  "2*a*b + 2*b*c + 2*c*d - b", "b^2 + 2*a*c + 2*b*d - c"};
    std::vector<LaurentPoly> p;
    for (const auto& s : g)
        p.push_back(parse_poly(s, R));
    return IdealHandle(R, p);
}

void BM_GroebnerKatsura3(benchmark::State& state) {
    const auto order = state.range(0) ? MonomialOrder::lex() : MonomialOrder::grevlex();
    for (auto _ : state) {
        IdealHandle I = katsura3();  // fresh handle, no cached basis
        benchmark::DoNotOptimize(I.gb(order));
    }
}
BENCHMARK(BM_GroebnerKatsura3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Saturation(benchmark::State& state) {
    for (auto _ : state) {
        IdealHandle I = deep(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(saturate_by_variables(I));
    }
}
BENCHMARK(BM_Saturation)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

IntMatrix random_basis(std::size_t n, int bits, std::uint64_t seed) {
    IntMatrix B = IntMatrix::identity(n);
    gmp_randclass r(gmp_randinit_default);
    r.seed(seed);
    for (std::size_t i = 0; i < n; ++i)
        B(i, 0) = r.get_z_bits(bits);
    return B;
}

void BM_Lll(benchmark::State& state) {
    IntMatrix B = random_basis(static_cast<std::size_t>(state.range(0)), 40, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(lll(LatticeBasis{B}, mpq_class(99, 100)));
}
BENCHMARK(BM_Lll)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Hnf(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(-50, 50);
    IntMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A(i, j) = e(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(hnf(A));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16);

void BM_TropicalSpan(benchmark::State& state) {
    RingPtr R = Ring::make({"x", "y", "z"});
    IdealHandle I(R, {parse_poly("x + y + z + 1", R)});
    for (auto _ : state)
        benchmark::DoNotOptimize(tropical_span(IdealHandle(R, I.generators())));
}
BENCHMARK(BM_TropicalSpan)->Unit(benchmark::kMillisecond);

void BM_ScalarRelations(benchmark::State& state) {
    // Roots of unity of order 12 and a rational point: rich relations.
    RingPtr R = Ring::make({"y1", "y2"});
    IdealHandle K(R, {parse_poly("y1^4 - y1^2 + 1", R), parse_poly("y2^2 - 3", R)});
    MulMatrices M = multiplication_matrices(K, quotient_basis(K));
    for (auto _ : state)
        benchmark::DoNotOptimize(scalar_relation_lattice(M));
}
BENCHMARK(BM_ScalarRelations)->Unit(benchmark::kMillisecond);

void BM_PipelineDeep(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(binomial_part_laurent(deep(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_PipelineDeep)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PipelineNoBinomial(benchmark::State& state) {
    RingPtr R = Ring::make({"x", "y", "z", "w"});
    for (auto _ : state)
        benchmark::DoNotOptimize(binomial_part_laurent(IdealHandle(R, {parse_poly("(x-y)*(z-w)", R)})));
}
BENCHMARK(BM_PipelineNoBinomial)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
