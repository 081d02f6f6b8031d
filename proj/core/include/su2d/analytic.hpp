#pragma once

#include <utility>
#include <vector>

#include "su2d/states.hpp"

// Closed-form correlation measures for the SU(2)-invariant family.  Every
// quantity is in bits.  The measurement-based quantities rely on the optimal
// qubit measurement being projective and direction-independent for these
// states, which the numeric oracle cross-checks.

namespace su2d {

// Eigenvalues of the conditional spin-j states after the optimal qubit
// measurement.  Values are stored in generation order: the pair (l_n^+, l_n^-)
// for n = 0, 1, ... and, for integer j only, one unpaired central value
// 1/(2j+1) at the end.  Always 2j+1 values in total.
struct PostMeasurementSpectrum {
    std::vector<double> values;

    Spectrum sorted() const { return Spectrum(values); }
};

// I(rho) = S(rho_a) + S(rho_b) - S(rho), evaluated in closed form.
double mutual_information(const SU2InvariantState& s);

// l_n^{+-} = 1/(2j+1) +- (j-n) |F(2j+1) - j| / (j(j+1)(2j+1)).
PostMeasurementSpectrum post_measurement_spectrum(const SU2InvariantState& s);

// Conditional spectra assembled directly from squared coupling amplitudes,
// one Spectrum per measurement outcome (each diagonal weight set has trace
// 1/2 and is rescaled by 2).  Agrees with post_measurement_spectrum; kept as
// an independent algebraic route.
std::pair<Spectrum, Spectrum> post_measurement_states_direct(const SU2InvariantState& s);

// C(rho) = log2(2j+1) + sum_n l_n log2 l_n.
double classical_correlations(const SU2InvariantState& s);

// D(rho) = I(rho) - C(rho).
double quantum_discord(const SU2InvariantState& s);

// Large-j asymptotic form of the discord, exact in the j -> inf limit and
// symmetric under F <-> 1-F at every j.
double discord_large_j(const SU2InvariantState& s);

// 0 up to the separability threshold, H[(sqrt(F) - sqrt(2j(1-F)))^2 / (2j+1)]
// above it.
double entanglement_of_formation(const SU2InvariantState& s);

// F_s = 2j/(2j+1): the state is separable iff F <= F_s.
double separability_threshold(TwiceJ j);

// F_d = j/(2j+1) = F_s/2: the single point where discord and classical
// correlations vanish (the state is maximally mixed there).
double discord_zero_point(TwiceJ j);

}  // namespace su2d
