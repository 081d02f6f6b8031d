#pragma once

#include <array>
#include <utility>

#include "su2d/linalg.hpp"

// Brute-force reference for the measurement-based quantities: projective
// qubit measurements along explicit Bloch directions, post-measurement
// ensembles built numerically, and the conditional entropy minimized over a
// direction grid.  Nothing here touches the closed forms in analytic.hpp;
// agreement between the two routes is what the verify command and the
// acceptance suite check.

namespace su2d {

// Unit Bloch vector selecting the measurement axis.
struct MeasurementDirection {
    double z1, z2, z3;

    // Norm must be 1 within 1e-12.
    MeasurementDirection(double z1, double z2, double z3);
};

// Direction reached by conjugating the z-axis projectors with the SU(2)
// element V = t + i y.sigma; requires t^2 + |y|^2 = 1 within 1e-12.
MeasurementDirection direction_from_unitary(double t, const std::array<double, 3>& y);

// Rank-1 projectors (I +- z.sigma)/2, in that order.
std::pair<ComplexMatrix, ComplexMatrix> projectors(const MeasurementDirection& d);

struct MeasurementOutcome {
    double probability = 0.0;
    // Normalized conditional spin-j state; left unnormalized when degenerate.
    ComplexMatrix conditional_state;
    // Probability below 1e-14: the outcome never occurs and is skipped by
    // entropy averages.
    bool degenerate = false;
};

struct MeasurementEnsemble {
    std::array<MeasurementOutcome, 2> outcomes;
};

// Measures subsystem b (which must be a qubit) along d: probabilities
// tr[(I (x) B_k) rho] and conditional states Tr_b[(I (x) B_k) rho (I (x) B_k)] / p_k.
MeasurementEnsemble measure(const DensityMatrix& rho, const MeasurementDirection& d);

// sum_k p_k S(rho_k) over the non-degenerate outcomes.
double conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& d);

// Direction grid: n_theta cos(theta)-uniform polar samples by n_phi uniform
// azimuthal samples; both must be at least 8.
struct GridResolution {
    int n_theta = 64;
    int n_phi = 128;
};

struct MinimizationResult {
    double min_entropy = 0.0;
    MeasurementDirection direction;
    // max - min of the conditional entropy over the raw grid.  Flat (at
    // roundoff level) for every SU(2)-invariant state.
    double landscape_spread = 0.0;
};

// Exhaustive grid scan with a deterministic reduction (minimum, ties broken
// lexicographically on the direction), followed by 20 shrinking-step
// coordinate-descent refinements in (theta, phi).
MinimizationResult minimize_conditional_entropy(const DensityMatrix& rho,
                                                GridResolution grid = {});

// S(rho_b) - S(rho) + min_d sum_k p_k S(rho_k), all entropies by numeric
// eigensolving.
double numeric_discord(const DensityMatrix& rho, GridResolution grid = {});

// Sum of |negative eigenvalues| of the partial transpose over b; zero
// exactly on the separable side of the family.
double negativity(const DensityMatrix& rho);

}  // namespace su2d
