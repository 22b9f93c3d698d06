#include <benchmark/benchmark.h>

#include <cmath>

#include "dmu/carleson.hpp"
#include "dmu/dirichlet.hpp"
#include "dmu/kernels.hpp"
#include "dmu/measures.hpp"

namespace {

dmu::AtomicBoundaryMeasure three_atoms() {
    return dmu::AtomicBoundaryMeasure({{dmu::BoundaryPoint(0.0), 0.7},
                                       {dmu::BoundaryPoint(1.0), 0.4},
                                       {dmu::BoundaryPoint(3.141592653589793), 0.9}});
}

dmu::Poly dense_poly(int degree) {
    std::vector<dmu::Complex> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k)
        c[static_cast<std::size_t>(k)] = {std::cos(0.7 * k), std::sin(1.3 * k)};
    return dmu::Poly{std::move(c)};
}

void BM_GramAssembly(benchmark::State& state) {
    const auto mu = three_atoms();
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dmu::gram_matrix(mu, N));
}
BENCHMARK(BM_GramAssembly)->Arg(64)->Arg(256)->Arg(1024);

void BM_KernelSolve(benchmark::State& state) {
    const auto mu = three_atoms();
    const int N = static_cast<int>(state.range(0));
    const dmu::TruncatedKernelSolver solver(mu, N);
    const dmu::Complex w{0.77, 0.31};
    for (auto _ : state) benchmark::DoNotOptimize(solver.solve(w));
}
BENCHMARK(BM_KernelSolve)->Arg(64)->Arg(256)->Arg(1024);

void BM_DirichletNorm(benchmark::State& state) {
    const auto mu = three_atoms();
    const auto f = dense_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dmu::dmu_norm_sq(f, mu));
}
BENCHMARK(BM_DirichletNorm)->Arg(32)->Arg(256)->Arg(2048);

void BM_BoxScan(benchmark::State& state) {
    const auto nu = dmu::PlanarMeasure::make_radial_power(0.5, 2.0);
    const auto mu = three_atoms();
    dmu::BoxScanConfig cfg;
    cfg.n_zeta = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dmu::dmu_carleson_test(nu, mu, cfg));
}
BENCHMARK(BM_BoxScan)->Arg(16)->Arg(64);

void BM_AreaDirichlet(benchmark::State& state) {
    const auto mu = three_atoms();
    const auto f = dense_poly(8);
    const int n = static_cast<int>(state.range(0));
    const auto quad = dmu::disk_quadrature(n, n);
    for (auto _ : state) benchmark::DoNotOptimize(dmu::dirichlet_mu_area(f, mu, quad));
}
BENCHMARK(BM_AreaDirichlet)->Arg(64)->Arg(128)->Arg(256);

void BM_OneAtomRatio(benchmark::State& state) {
    const dmu::RktEngine engine(dmu::AtomicBoundaryMeasure({{dmu::BoundaryPoint(0.0), 1.0}}), 0);
    const auto nu = dmu::PlanarMeasure::make_area(1.0);
    const double h = std::ldexp(1.0, -static_cast<int>(state.range(0)));
    const dmu::Complex w{1.0 - h, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(engine.ratio(nu, w));
}
BENCHMARK(BM_OneAtomRatio)->Arg(4)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
