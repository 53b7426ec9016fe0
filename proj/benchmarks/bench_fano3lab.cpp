#include <fano3lab/autgrp.hpp>
#include <fano3lab/linalgeom.hpp>
#include <fano3lab/quintics.hpp>

#include <benchmark/benchmark.h>

using namespace fano3lab;

namespace {

void BM_CycMultiply(benchmark::State& state) {
    CycNum a = parse_scalar("1 + 2*z - z^7/3 + z^13"), b = parse_scalar("z^3 - 5/7*z^11 + 2");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply);

void BM_CycInverse(benchmark::State& state) {
    CycNum a = parse_scalar("1 + 2*z - z^7/3 + z^13");
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycInverse);

void BM_ActSextic(benchmark::State& state) {
    GroupElt2 g(parse_scalar("1 + z"), 2, parse_scalar("z^5"), -3);
    BinaryForm f = phi6();
    for (auto _ : state) benchmark::DoNotOptimize(act(g, f));
}
BENCHMARK(BM_ActSextic);

void BM_Resultant(benchmark::State& state) {
    UniPoly f = parse_binary_form("x^6 - 3*x^4*y^2 + x*y^5 + 7*y^6").dehomogenize();
    UniPoly g = parse_binary_form("2*x^5 + x^3*y^2 - y^5").dehomogenize();
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant);

void BM_ClassifyPoint(benchmark::State& state) {
    BinaryForm phi = phi6();
    for (auto _ : state) benchmark::DoNotOptimize(classify_point(phi));
}
BENCHMARK(BM_ClassifyPoint);

void BM_LinesThroughPoint(benchmark::State& state) {
    PointOnY p = *classify_point(phi6());
    for (auto _ : state) benchmark::DoNotOptimize(lines_through_point(p));
}
BENCHMARK(BM_LinesThroughPoint);

void BM_OctahedralClosure(benchmark::State& state) {
    auto gens = octahedral_generators();
    for (auto _ : state) benchmark::DoNotOptimize(closure(gens, 100));
}
BENCHMARK(BM_OctahedralClosure);

void BM_SigmaZ(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sigma_z({CurveLabel::M, 2}));
}
BENCHMARK(BM_SigmaZ);

void BM_IntersectionMultiplicity(benchmark::State& state) {
    PlaneCurve a = PlaneCurve::parse("4*c0*c2 - c1^2 + 4*c2^2"), b = PlaneCurve::parse("4*c0*c2 - c1^2 - 4*c2^2");
    PlanePoint p(1, 0, 0);
    for (auto _ : state) benchmark::DoNotOptimize(intersection_multiplicity(a, b, p));
}
BENCHMARK(BM_IntersectionMultiplicity);

void BM_Pfaffian6(benchmark::State& state) {
    Matrix m(6, 6);
    long v = 1;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            m(i, j) = v;
            m(j, i) = -v;
            v = (v * 7 + 3) % 11 - 5;
        }
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian6);

void BM_RecoverW4(benchmark::State& state) {
    Pencil p{Matrix(6, 6), Matrix(6, 6)};
    auto pair = [](Matrix& m, std::size_t i, std::size_t j) {
        m(i, j) = 1;
        m(j, i) = -1;
    };
    pair(p[0], 0, 4);
    pair(p[0], 1, 5);
    pair(p[1], 2, 4);
    pair(p[1], 3, 5);
    for (auto _ : state) benchmark::DoNotOptimize(recover_W4(p));
}
BENCHMARK(BM_RecoverW4);

}  // namespace

BENCHMARK_MAIN();
