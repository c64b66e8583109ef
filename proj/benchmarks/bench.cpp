#include <benchmark/benchmark.h>

#include "crpc/diffgeo.hpp"
#include "crpc/planar.hpp"
#include "crpc/topview.hpp"

using namespace crpc;

static void BM_ProfileConstruction(benchmark::State& state) {
    for (auto _ : state) {
        GluedProfile p = GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full);
        benchmark::DoNotOptimize(p.anchor());
    }
}
BENCHMARK(BM_ProfileConstruction);

static void BM_ProfilePoint(benchmark::State& state) {
    GluedProfile p = GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full);
    double t = -3.0;
    for (auto _ : state) {
        t = t >= 3.0 ? -3.0 : t + 0.013;
        Vec3 v = p.point(t);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ProfilePoint);

static void BM_SurfacePartials(benchmark::State& state) {
    HelicalPatch patch{GluedProfile::make({3.0, 1.0, 0.5}, BranchTag::Full)};
    double t = -2.0;
    for (auto _ : state) {
        t = t >= 2.0 ? -2.0 : t + 0.017;
        Partials d = surface_partials(patch, 1.0, t);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SurfacePartials);

static void BM_CertificateGrid(benchmark::State& state) {
    int n = int(state.range(0));
    for (auto _ : state) {
        CertificateReport rep = crpc_certificate(3.0, 1.0, 0.5, n, n);
        benchmark::DoNotOptimize(rep.max_rel_deviation);
    }
}
BENCHMARK(BM_CertificateGrid)->Arg(8)->Arg(16)->Arg(32);

static void BM_ResidualStats(benchmark::State& state) {
    for (auto _ : state) {
        ResidualStats st = residual_stats(3.0, 1.0, 200);
        benchmark::DoNotOptimize(st.max_ode_residual);
    }
}
BENCHMARK(BM_ResidualStats);

static void BM_ImplicitPolynomial(benchmark::State& state) {
    int n = int(state.range(0)), m = int(state.range(1));
    for (auto _ : state) {
        MultiPoly p = build_implicit_polynomial(n, m, Rational(1));
        benchmark::DoNotOptimize(p.term_count());
    }
}
BENCHMARK(BM_ImplicitPolynomial)->Args({3, 1})->Args({2, 1})->Args({1, 2});

static void BM_PlaneSection(benchmark::State& state) {
    for (auto _ : state) {
        PlanarProfile pp = plane_section(3.0, 1.0, 0.5, 1.5707963267948966, 500);
        benchmark::DoNotOptimize(pp.points.size());
    }
}
BENCHMARK(BM_PlaneSection);

BENCHMARK_MAIN();
