#pragma once

#include "su2d/linalg.hpp"

// Coupling of a spin j to a spin 1/2.  All spin projections are carried as
// doubled integers (2j, 2m) so half-integer bookkeeping stays exact.

namespace su2d {

// Spin magnitude of subsystem a, stored as the integer 2j >= 1.
struct TwiceJ {
    int value;

    explicit TwiceJ(int two_j);

    int dim_a() const { return value + 1; }           // 2j+1
    int dim_total() const { return 2 * (value + 1); } // (2j+1)*2
};

// Total-spin branch: J = j + 1/2 (plus) or J = j - 1/2 (minus).
enum class Branch { plus, minus };

// Amplitude pair coupling the product states |m - 1/2>|up> (weight a) and
// |m + 1/2>|down> (weight b) into |J, m>.  Phase convention: b >= 0 always,
// a >= 0 on the plus branch, a <= 0 on the minus branch.
struct CGPair {
    double a;
    double b;
    Branch branch;
    int two_m;
};

// two_m must have the opposite parity of two_j and satisfy |2m| <= 2j+1 on
// the plus branch, |2m| <= 2j-1 on the minus branch.
CGPair cg_pair(TwiceJ j, int two_m, Branch branch);

// Change of basis from the product basis to the total-spin basis; real
// orthogonal, returned as a complex matrix for composability.
//
// Row (product) order: index 2*ia + ib with m_a = j - ia descending and
// ib = 0 for the qubit up state.  Column (coupled) order: the J = j + 1/2
// block first, then J = j - 1/2, both with M descending.
ComplexMatrix coupling_unitary(TwiceJ j);

}  // namespace su2d
