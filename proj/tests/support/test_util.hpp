#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <random>

#include "su2d/linalg.hpp"

// Shared helpers for the test binaries: a small matrix exponential for
// building rotation unitaries, angular-momentum operators in the library's
// m-descending basis, and seeded random draws.

namespace su2d::testing {

// exp(i h) for Hermitian h, by scaling-and-squaring on the Taylor series.
// Plenty accurate (~1e-14) for the modest norms used in tests; the library
// itself never needs matrix exponentials, only eigenvalues.
inline ComplexMatrix expi(const ComplexMatrix& h) {
    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    a *= cplx(0.0, 1.0);

    int squarings = 0;
    double norm = a.max_abs() * static_cast<double>(n);
    while (norm > 0.5 && squarings < 40) {
        norm *= 0.5;
        ++squarings;
    }
    a *= std::ldexp(1.0, -squarings);

    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = term * a;
        term *= 1.0 / k;
        result += term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

struct SpinOps {
    ComplexMatrix jx, jy, jz;
};

// Angular-momentum matrices for spin j = two_j/2 in the basis ordered by m
// descending from j to -j (the library's convention for subsystem a).
inline SpinOps spin_operators(int two_j) {
    const auto dim = static_cast<std::size_t>(two_j + 1);
    const double j = 0.5 * two_j;
    ComplexMatrix jz(dim, dim);
    ComplexMatrix jplus(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double m = j - static_cast<double>(i);
        jz(i, i) = m;
        if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    const ComplexMatrix jminus = jplus.adjoint();
    SpinOps ops{ComplexMatrix(dim, dim), ComplexMatrix(dim, dim), jz};
    ops.jx = jplus;
    ops.jx += jminus;
    ops.jx *= 0.5;
    ops.jy = jplus;
    ops.jy -= jminus;
    ops.jy *= cplx(0.0, -0.5);
    return ops;
}

inline std::array<double, 3> random_unit3(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const double x = gauss(rng), y = gauss(rng), z = gauss(rng);
        const double r = std::sqrt(x * x + y * y + z * z);
        if (r > 1e-6) return {x / r, y / r, z / r};
    }
}

// Random point on the 3-sphere, as (t, y1, y2, y3) with t^2 + |y|^2 = 1.
inline std::array<double, 4> random_unit4(std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const double t = gauss(rng), y1 = gauss(rng), y2 = gauss(rng), y3 = gauss(rng);
        const double r = std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
        if (r > 1e-6) return {t / r, y1 / r, y2 / r, y3 / r};
    }
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    ComplexMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = dist(rng);
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx v(dist(rng), dist(rng));
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    }
    return h;
}

}  // namespace su2d::testing
