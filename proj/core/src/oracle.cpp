#include "su2d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "su2d/parallel.hpp"

namespace su2d {

namespace {

constexpr double kDegenerateProbability = 1e-14;
constexpr double kPi = std::numbers::pi;

// (I (x) B) rho (I (x) B).  I (x) B is block diagonal in 2x2 qubit blocks, so
// the sandwich costs O(dim^2) instead of two dense products.
ComplexMatrix qubit_sandwich(const ComplexMatrix& rho, const ComplexMatrix& b, std::size_t dim_a) {
    const std::size_t n = rho.rows();
    ComplexMatrix left(n, n);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t col = 0; col < n; ++col) {
            const cplx r0 = rho(2 * i, col);
            const cplx r1 = rho(2 * i + 1, col);
            left(2 * i, col) = b(0, 0) * r0 + b(0, 1) * r1;
            left(2 * i + 1, col) = b(1, 0) * r0 + b(1, 1) * r1;
        }
    ComplexMatrix out(n, n);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k < dim_a; ++k) {
            const cplx c0 = left(row, 2 * k);
            const cplx c1 = left(row, 2 * k + 1);
            out(row, 2 * k) = c0 * b(0, 0) + c1 * b(1, 0);
            out(row, 2 * k + 1) = c0 * b(0, 1) + c1 * b(1, 1);
        }
    return out;
}

MeasurementDirection polar_direction(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

MeasurementDirection grid_direction(const GridResolution& g, std::size_t idx) {
    const std::size_t it = idx / static_cast<std::size_t>(g.n_phi);
    const std::size_t ip = idx % static_cast<std::size_t>(g.n_phi);
    // Midpoint sampling, uniform in cos(theta); no duplicated poles.
    const double u = 1.0 - (2.0 * static_cast<double>(it) + 1.0) / g.n_theta;
    const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
    const double phi = 2.0 * kPi * static_cast<double>(ip) / g.n_phi;
    return {st * std::cos(phi), st * std::sin(phi), u};
}

bool direction_less(const MeasurementDirection& a, const MeasurementDirection& b) {
    if (a.z1 != b.z1) return a.z1 < b.z1;
    if (a.z2 != b.z2) return a.z2 < b.z2;
    return a.z3 < b.z3;
}

}  // namespace

MeasurementDirection::MeasurementDirection(double a, double b, double c) : z1(a), z2(b), z3(c) {
    const double norm = std::sqrt(z1 * z1 + z2 * z2 + z3 * z3);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::domain_error("MeasurementDirection: |z| differs from 1 beyond 1e-12");
}

MeasurementDirection direction_from_unitary(double t, const std::array<double, 3>& y) {
    const double norm = std::sqrt(t * t + y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::domain_error("direction_from_unitary: t^2 + |y|^2 differs from 1 beyond 1e-12");
    // Third row of the SO(3) rotation induced by V on the Pauli vector.
    return {2.0 * (t * y[1] + y[0] * y[2]),
            2.0 * (-t * y[0] + y[1] * y[2]),
            t * t + y[2] * y[2] - y[0] * y[0] - y[1] * y[1]};
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const MeasurementDirection& d) {
    ComplexMatrix b0(2, 2);
    b0(0, 0) = 0.5 * (1.0 + d.z3);
    b0(0, 1) = 0.5 * cplx(d.z1, -d.z2);
    b0(1, 0) = 0.5 * cplx(d.z1, d.z2);
    b0(1, 1) = 0.5 * (1.0 - d.z3);
    ComplexMatrix b1(2, 2);
    b1(0, 0) = 0.5 * (1.0 - d.z3);
    b1(0, 1) = 0.5 * cplx(-d.z1, d.z2);
    b1(1, 0) = 0.5 * cplx(-d.z1, -d.z2);
    b1(1, 1) = 0.5 * (1.0 + d.z3);
    return {std::move(b0), std::move(b1)};
}

MeasurementEnsemble measure(const DensityMatrix& rho, const MeasurementDirection& d) {
    if (rho.dim_b != 2) throw std::invalid_argument("measure: subsystem b must be a qubit");
    const auto [b0, b1] = projectors(d);
    const ComplexMatrix* proj[2] = {&b0, &b1};
    MeasurementEnsemble ens;
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix sandwich = qubit_sandwich(rho.mat, *proj[k], rho.dim_a);
        MeasurementOutcome& out = ens.outcomes[static_cast<std::size_t>(k)];
        out.probability = sandwich.trace().real();
        out.conditional_state = partial_trace(sandwich, rho.dim_a, 2, Subsystem::A);
        out.degenerate = out.probability < kDegenerateProbability;
        if (!out.degenerate) out.conditional_state *= 1.0 / out.probability;
    }
    return ens;
}

double conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& d) {
    double s = 0.0;
    for (const MeasurementOutcome& out : measure(rho, d).outcomes)
        if (!out.degenerate) s += out.probability * von_neumann_entropy(out.conditional_state);
    return s;
}

MinimizationResult minimize_conditional_entropy(const DensityMatrix& rho, GridResolution grid) {
    if (grid.n_theta < 8 || grid.n_phi < 8)
        throw std::invalid_argument("minimize_conditional_entropy: grid must be at least 8x8");
    if (rho.dim_b != 2)
        throw std::invalid_argument("minimize_conditional_entropy: subsystem b must be a qubit");

    const std::size_t total =
        static_cast<std::size_t>(grid.n_theta) * static_cast<std::size_t>(grid.n_phi);
    std::vector<double> entropy(total);
    parallel_for(total,
                 [&](std::size_t i) { entropy[i] = conditional_entropy(rho, grid_direction(grid, i)); });

    std::size_t best = 0;
    double lo = entropy[0];
    double hi = entropy[0];
    MeasurementDirection best_dir = grid_direction(grid, 0);
    for (std::size_t i = 1; i < total; ++i) {
        hi = std::max(hi, entropy[i]);
        if (entropy[i] > lo) continue;
        const MeasurementDirection d = grid_direction(grid, i);
        if (entropy[i] < lo || direction_less(d, best_dir)) {
            lo = entropy[i];
            best = i;
            best_dir = d;
        }
    }

    // Local refinement: shrinking-step coordinate descent in (theta, phi).
    double theta = std::acos(1.0 - (2.0 * static_cast<double>(best / grid.n_phi) + 1.0) / grid.n_theta);
    double phi = 2.0 * kPi * static_cast<double>(best % grid.n_phi) / grid.n_phi;
    double step_t = kPi / grid.n_theta;
    double step_p = 2.0 * kPi / grid.n_phi;
    double best_e = lo;
    for (int iter = 0; iter < 20; ++iter) {
        bool improved = false;
        const double cand[4][2] = {{theta + step_t, phi},
                                   {theta - step_t, phi},
                                   {theta, phi + step_p},
                                   {theta, phi - step_p}};
        for (const auto& c : cand) {
            const double ct = std::clamp(c[0], 0.0, kPi);
            const double cp = std::fmod(c[1] + 2.0 * kPi, 2.0 * kPi);
            const double e = conditional_entropy(rho, polar_direction(ct, cp));
            if (e < best_e) {
                best_e = e;
                theta = ct;
                phi = cp;
                improved = true;
            }
        }
        if (!improved) {
            step_t *= 0.5;
            step_p *= 0.5;
        }
    }

    return {best_e, polar_direction(theta, phi), hi - lo};
}

double numeric_discord(const DensityMatrix& rho, GridResolution grid) {
    const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    const double s_ab = von_neumann_entropy(rho);
    return s_b - s_ab + minimize_conditional_entropy(rho, grid).min_entropy;
}

double negativity(const DensityMatrix& rho) {
    const Spectrum spec = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
    double neg = 0.0;
    for (double v : spec.values())
        if (v < 0.0) neg -= v;
    return neg;
}

}  // namespace su2d
