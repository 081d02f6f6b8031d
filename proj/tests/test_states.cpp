#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "su2d/analytic.hpp"
#include "su2d/states.hpp"
#include "support/test_util.hpp"

using namespace su2d;
using testing::expi;
using testing::random_unit3;
using testing::spin_operators;

TEST_CASE("state parameter validation") {
    CHECK_THROWS_AS(SU2InvariantState(TwiceJ(1), -0.1), std::domain_error);
    CHECK_THROWS_AS(SU2InvariantState(TwiceJ(1), 1.1), std::domain_error);
    // Values within the roundoff band clamp onto the interval.
    CHECK(SU2InvariantState(TwiceJ(1), -1e-13).F == 0.0);
    CHECK(SU2InvariantState(TwiceJ(1), 1.0 + 1e-13).F == 1.0);
}

TEST_CASE("total-spin basis diagonal form") {
    // Pure singlet: all weight on the one-dimensional J = 0 block, which
    // comes last in the basis ordering.
    const DensityMatrix singlet = build_total_basis({TwiceJ(1), 1.0});
    const std::vector<double> want = {0.0, 0.0, 0.0, 1.0};
    CHECK(singlet.mat.max_abs_diff(ComplexMatrix::diagonal(want)) <= 1e-15);

    // F at the maximally mixed point gives the identity / dim.
    const DensityMatrix mixed = build_total_basis({TwiceJ(1), 0.25});
    ComplexMatrix quarter = ComplexMatrix::identity(4);
    quarter *= 0.25;
    CHECK(mixed.mat.max_abs_diff(quarter) <= 1e-15);

    // j = 3/2, F = 1/2: weight (1-F)/(2j+2) = 1/10 on the five J = 2 slots
    // (leading block), F/2j = 1/6 on the three J = 1 slots.
    const DensityMatrix d = build_total_basis({TwiceJ(3), 0.5});
    const std::vector<double> expect = {0.1, 0.1, 0.1, 0.1, 0.1, 1.0 / 6, 1.0 / 6, 1.0 / 6};
    CHECK(d.mat.max_abs_diff(ComplexMatrix::diagonal(expect)) <= 1e-15);
}

TEST_CASE("product basis matches the unitary conjugation of the diagonal form") {
    for (int tj : {1, 2, 3, 4, 9}) {
        const ComplexMatrix u = coupling_unitary(TwiceJ(tj));
        for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const SU2InvariantState s{TwiceJ(tj), f};
            const ComplexMatrix direct = build_product_basis(s).mat;
            const ComplexMatrix conjugated = u * build_total_basis(s).mat * u.adjoint();
            CHECK(direct.max_abs_diff(conjugated) <= 1e-12);
        }
    }
}

TEST_CASE("explicit product-basis matrices at j = 1/2") {
    // Pure singlet projector.
    const DensityMatrix singlet = build_product_basis({TwiceJ(1), 1.0});
    CHECK(singlet.mat(0, 0).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(singlet.mat(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(singlet.mat(2, 2).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(singlet.mat(3, 3).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(singlet.mat(1, 2).real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(singlet.mat(2, 1).real() == doctest::Approx(-0.5).epsilon(1e-15));

    // F = 0: normalized projector onto the triplet.
    const DensityMatrix triplet = build_product_basis({TwiceJ(1), 0.0});
    const double third = 1.0 / 3.0;
    CHECK(triplet.mat(0, 0).real() == doctest::Approx(third).epsilon(1e-14));
    CHECK(triplet.mat(3, 3).real() == doctest::Approx(third).epsilon(1e-14));
    CHECK(triplet.mat(1, 1).real() == doctest::Approx(third / 2).epsilon(1e-14));
    CHECK(triplet.mat(1, 2).real() == doctest::Approx(third / 2).epsilon(1e-14));
}

TEST_CASE("reduced states are maximally mixed") {
    for (int tj : {1, 9}) {
        for (double f : {0.0, 0.3, 1.0}) {
            const SU2InvariantState s{TwiceJ(tj), f};
            const auto [ra, rb] = reduced_states(s);
            const auto da = static_cast<std::size_t>(tj + 1);
            ComplexMatrix ia = ComplexMatrix::identity(da);
            ia *= 1.0 / static_cast<double>(da);
            ComplexMatrix ib = ComplexMatrix::identity(2);
            ib *= 0.5;
            CHECK(ra.max_abs_diff(ia) == 0.0);
            CHECK(rb.max_abs_diff(ib) == 0.0);
            CHECK(std::abs(ra.trace() - 1.0) <= 1e-15);
            CHECK(std::abs(rb.trace() - 1.0) <= 1e-15);

            // And they agree with tracing the actual state.
            const DensityMatrix rho = build_product_basis(s);
            CHECK(partial_trace(rho, Subsystem::A).max_abs_diff(ia) <= 1e-12);
            CHECK(partial_trace(rho, Subsystem::B).max_abs_diff(ib) <= 1e-12);
        }
    }
}

TEST_CASE("state spectrum multisets") {
    const Spectrum singlet = state_spectrum({TwiceJ(1), 1.0});
    CHECK(singlet.values() == std::vector<double>{1.0, 0.0, 0.0, 0.0});

    // At F = F_d the state is maximally mixed.
    const double fd = discord_zero_point(TwiceJ(3));
    CHECK(fd == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    const Spectrum mixed = state_spectrum({TwiceJ(3), fd});
    for (double v : mixed.values()) CHECK(v == doctest::Approx(0.125).epsilon(1e-15));

    const Spectrum two = state_spectrum({TwiceJ(2), 0.5});
    CHECK(two.values()[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(two.values()[1] == doctest::Approx(0.25).epsilon(1e-15));
    for (std::size_t i = 2; i < 6; ++i) CHECK(two.values()[i] == doctest::Approx(0.125).epsilon(1e-15));

    // The closed-form multiset matches the numerically diagonalized state.
    for (int tj : {1, 3, 9}) {
        for (double f : {0.0, 0.4, 1.0}) {
            const SU2InvariantState s{TwiceJ(tj), f};
            const Spectrum direct = state_spectrum(s);
            const Spectrum numeric = hermitian_eigenvalues(build_product_basis(s).mat);
            for (std::size_t i = 0; i < direct.size(); ++i)
                CHECK(std::abs(direct.values()[i] - numeric.values()[i]) <= 1e-10);
        }
    }
}

TEST_CASE("construction succeeds across the full parameter grid") {
    // The DensityMatrix constructor itself verifies hermiticity, trace and
    // positivity, so building is the assertion.
    for (int tj : {1, 2, 3, 4, 9, 49}) {
        const double fd = discord_zero_point(TwiceJ(tj));
        const double fs = separability_threshold(TwiceJ(tj));
        for (double f : {0.0, 0.25, fd, 0.5, fs, 0.9, 1.0}) {
            CHECK_NOTHROW(build_product_basis({TwiceJ(tj), f}));
        }
    }
}

TEST_CASE("states are invariant under identical rotations of both spins") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    for (int tj : {1, 2, 3, 9}) {
        const auto ops_a = spin_operators(tj);
        const auto ops_b = spin_operators(1);
        const SU2InvariantState s{TwiceJ(tj), 0.7};
        const DensityMatrix rho = build_product_basis(s);
        for (int trial = 0; trial < 20; ++trial) {
            const auto axis = random_unit3(rng);
            const double th = angle(rng);
            ComplexMatrix ga = ops_a.jx;
            ga *= th * axis[0];
            ComplexMatrix tmp = ops_a.jy;
            tmp *= th * axis[1];
            ga += tmp;
            tmp = ops_a.jz;
            tmp *= th * axis[2];
            ga += tmp;

            ComplexMatrix gb = ops_b.jx;
            gb *= th * axis[0];
            tmp = ops_b.jy;
            tmp *= th * axis[1];
            gb += tmp;
            tmp = ops_b.jz;
            tmp *= th * axis[2];
            gb += tmp;

            const ComplexMatrix u = tensor(expi(ga), expi(gb));
            const ComplexMatrix rotated = u * rho.mat * u.adjoint();
            CHECK(rotated.max_abs_diff(rho.mat) <= 1e-10);
        }
    }
}

TEST_CASE("states commute with the total spin components") {
    for (int tj : {1, 2, 3, 9}) {
        const auto ops_a = spin_operators(tj);
        const auto ops_b = spin_operators(1);
        const auto da = static_cast<std::size_t>(tj + 1);
        const ComplexMatrix ia = ComplexMatrix::identity(da);
        const ComplexMatrix ib = ComplexMatrix::identity(2);
        const ComplexMatrix jz = tensor(ops_a.jz, ib) + tensor(ia, ops_b.jz);
        const ComplexMatrix jx = tensor(ops_a.jx, ib) + tensor(ia, ops_b.jx);
        for (double f : {0.0, 0.5, 1.0}) {
            const ComplexMatrix rho = build_product_basis({TwiceJ(tj), f}).mat;
            CHECK((rho * jz - jz * rho).max_abs() <= 1e-10);
            CHECK((rho * jx - jx * rho).max_abs() <= 1e-10);
        }
    }
}
