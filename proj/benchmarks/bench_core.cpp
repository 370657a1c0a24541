#include <benchmark/benchmark.h>

#include <numbers>

#include "laxforge/grammar.hpp"
#include "laxforge/hamilton.hpp"
#include "laxforge/numlab.hpp"

using namespace laxforge;

namespace {

void BM_ScalarMultiply(benchmark::State& state) {
    Scalar a(Rational(BigInt(3), BigInt(7)), Rational(1), Rational(BigInt(-2), BigInt(5)),
             Rational(2));
    Scalar b = a.conj_i() + Scalar::rat(1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_ScalarMultiply);

void BM_DiffPolyMultiply(benchmark::State& state) {
    DiffPoly f = parse_poly("q1*r1x + 2*q2x*r2 - 1/2*q1^2*r1 + Dinv(q1x*r1)");
    DiffPoly g = parse_poly("r1*q1x - q2*r2x + 3*q1*q2*r1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_DiffPolyMultiply);

void BM_SolveHierarchyKIdempotent(benchmark::State& state) {
    auto fam = build_family(FamilyKind::KIdempotent, 0);
    for (auto _ : state) {
        auto lp = assemble(fam, 4);
        auto ht = solve_hierarchy(lp, default_seeds(lp), 2);
        benchmark::DoNotOptimize(ht.stack_at(2));
    }
}
BENCHMARK(BM_SolveHierarchyKIdempotent);

void BM_ExtractOperatorHadamard(benchmark::State& state) {
    auto fam = build_family(FamilyKind::Hadamard, 0);
    auto lp = assemble(fam, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_recursion_operator(lp));
    }
}
BENCHMARK(BM_ExtractOperatorHadamard);

void BM_SpectralRhs(benchmark::State& state) {
    auto fam = build_family(FamilyKind::Nilpotent, 2);
    auto lp = assemble(fam, 4);
    auto ht = solve_hierarchy(lp, default_seeds(lp), 2);
    auto rhs = compile_rhs(emit_pde_system(lp, ht, 2));
    std::size_t nx = static_cast<std::size_t>(state.range(0));
    GridState s = make_state(nx, 2 * std::numbers::pi, 3);
    for (int c = 1; c <= 3; ++c)
        for (std::size_t i = 0; i < nx; ++i) {
            double x = 2 * std::numbers::pi * static_cast<double>(i) / nx;
            s.field(VarKind::Q, c)[i] = Cx(0.01 * std::cos(x), 0);
            s.field(VarKind::R, c)[i] = Cx(0.01 * std::sin(x), 0);
        }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rhs(s));
    }
}
BENCHMARK(BM_SpectralRhs)->Arg(128)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
