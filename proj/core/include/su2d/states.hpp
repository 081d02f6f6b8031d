#pragma once

#include <utility>

#include "su2d/angular.hpp"
#include "su2d/linalg.hpp"

// The one-parameter family of SU(2)-invariant states of a spin-j x spin-1/2
// pair: an incoherent mixture of the two total-spin multiplets, F being the
// total weight of the J = j - 1/2 one.

namespace su2d {

struct SU2InvariantState {
    TwiceJ j;
    double F;

    // F outside [0, 1] by more than 1e-12 is an error; inside the slack band
    // it is clamped onto the interval.
    SU2InvariantState(TwiceJ j, double F);

    // Eigenvalue on the J = j - 1/2 multiplet (degeneracy 2j): F / 2j.
    double weight_minus() const { return F / j.value; }
    // Eigenvalue on the J = j + 1/2 multiplet (degeneracy 2j+2): (1-F) / (2j+2).
    double weight_plus() const { return (1.0 - F) / (j.value + 2); }
};

// Diagonal form in the total-spin basis, J = j + 1/2 block first, M
// descending within each block.
DensityMatrix build_total_basis(const SU2InvariantState& s);

// Same state assembled term by term in the product basis from cg_pair
// amplitudes; equals the coupling_unitary conjugation of the diagonal form.
DensityMatrix build_product_basis(const SU2InvariantState& s);

// Both marginals are maximally mixed: (I/(2j+1), I/2).
std::pair<ComplexMatrix, ComplexMatrix> reduced_states(const SU2InvariantState& s);

// Full eigenvalue multiset {F/2j (x 2j), (1-F)/(2j+2) (x 2j+2)}, zeros kept.
Spectrum state_spectrum(const SU2InvariantState& s);

}  // namespace su2d
