#include "su2d/angular.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace su2d {

TwiceJ::TwiceJ(int two_j) : value(two_j) {
    if (two_j < 1) throw std::invalid_argument("TwiceJ: 2j must be >= 1");
}

CGPair cg_pair(TwiceJ j, int two_m, Branch branch) {
    const int tj = j.value;
    if (((tj + two_m) & 1) == 0)
        throw std::invalid_argument("cg_pair: 2m = " + std::to_string(two_m) +
                                    " has the wrong parity for 2j = " + std::to_string(tj));
    const int bound = branch == Branch::plus ? tj + 1 : tj - 1;
    if (two_m < -bound || two_m > bound)
        throw std::invalid_argument("cg_pair: 2m = " + std::to_string(two_m) +
                                    " outside the |2m| <= " + std::to_string(bound) + " range");

    // (j + 1/2 +- m) / (2j + 1) expressed in doubled integers.
    const double up = (tj + 1 + two_m) / (2.0 * (tj + 1));
    const double dn = (tj + 1 - two_m) / (2.0 * (tj + 1));
    if (branch == Branch::plus) return {std::sqrt(up), std::sqrt(dn), branch, two_m};
    return {-std::sqrt(dn), std::sqrt(up), branch, two_m};
}

namespace {

// Row index of the product state with a-projection 2m_a (paired with ib).
inline std::size_t product_row(int tj, int two_ma, int ib) {
    return static_cast<std::size_t>((tj - two_ma) / 2) * 2 + static_cast<std::size_t>(ib);
}

}  // namespace

ComplexMatrix coupling_unitary(TwiceJ j) {
    const int tj = j.value;
    ComplexMatrix u(static_cast<std::size_t>(j.dim_total()), static_cast<std::size_t>(j.dim_total()));
    std::size_t col = 0;
    for (int two_m = tj + 1; two_m >= -(tj + 1); two_m -= 2, ++col) {
        const CGPair cg = cg_pair(j, two_m, Branch::plus);
        // Amplitudes vanish identically where m -+ 1/2 leaves the spin-j range.
        if (tj + 1 + two_m > 0) u(product_row(tj, two_m - 1, 0), col) = cg.a;
        if (tj + 1 - two_m > 0) u(product_row(tj, two_m + 1, 1), col) = cg.b;
    }
    for (int two_m = tj - 1; two_m >= -(tj - 1); two_m -= 2, ++col) {
        const CGPair cg = cg_pair(j, two_m, Branch::minus);
        u(product_row(tj, two_m - 1, 0), col) = cg.a;
        u(product_row(tj, two_m + 1, 1), col) = cg.b;
    }
    return u;
}

}  // namespace su2d
