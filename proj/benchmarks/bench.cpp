#include <benchmark/benchmark.h>

#include <random>

#include "su2d/analytic.hpp"
#include "su2d/linalg.hpp"
#include "su2d/oracle.hpp"
#include "su2d/states.hpp"

namespace bm = benchmark;

namespace {

su2d::ComplexMatrix random_hermitian(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    su2d::ComplexMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = dist(rng);
        for (std::size_t c = r + 1; c < n; ++c) {
            const su2d::cplx v(dist(rng), dist(rng));
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    }
    return h;
}

void BM_HermitianEigenvalues(bm::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const su2d::ComplexMatrix h = random_hermitian(n, 42);
    for (auto _ : state) {
        auto ev = su2d::hermitian_eigenvalues(h);
        bm::DoNotOptimize(ev);
    }
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(8)->Arg(20)->Arg(64)->Arg(100);

void BM_BuildProductBasis(bm::State& state) {
    const su2d::SU2InvariantState s{su2d::TwiceJ(static_cast<int>(state.range(0))), 0.7};
    for (auto _ : state) {
        auto rho = su2d::build_product_basis(s);
        bm::DoNotOptimize(rho);
    }
}
BENCHMARK(BM_BuildProductBasis)->Arg(3)->Arg(9)->Arg(49);

void BM_ConditionalEntropy(bm::State& state) {
    const su2d::SU2InvariantState s{su2d::TwiceJ(static_cast<int>(state.range(0))), 0.7};
    const su2d::DensityMatrix rho = su2d::build_product_basis(s);
    const su2d::MeasurementDirection dir{0.48, 0.6, 0.64};
    for (auto _ : state) {
        double e = su2d::conditional_entropy(rho, dir);
        bm::DoNotOptimize(e);
    }
}
BENCHMARK(BM_ConditionalEntropy)->Arg(1)->Arg(3)->Arg(9);

void BM_Negativity(bm::State& state) {
    const su2d::SU2InvariantState s{su2d::TwiceJ(static_cast<int>(state.range(0))), 0.95};
    const su2d::DensityMatrix rho = su2d::build_product_basis(s);
    for (auto _ : state) {
        double n = su2d::negativity(rho);
        bm::DoNotOptimize(n);
    }
}
BENCHMARK(BM_Negativity)->Arg(3)->Arg(9)->Arg(49);

}  // namespace

BENCHMARK_MAIN();
