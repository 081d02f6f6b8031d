#include "su2d/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace su2d {

SU2InvariantState::SU2InvariantState(TwiceJ j_, double F_) : j(j_), F(F_) {
    if (F < -1e-12 || F > 1.0 + 1e-12)
        throw std::domain_error("SU2InvariantState: F = " + std::to_string(F) + " outside [0,1]");
    F = std::clamp(F, 0.0, 1.0);
}

DensityMatrix build_total_basis(const SU2InvariantState& s) {
    const int tj = s.j.value;
    std::vector<double> diag;
    diag.reserve(static_cast<std::size_t>(s.j.dim_total()));
    diag.insert(diag.end(), static_cast<std::size_t>(tj + 2), s.weight_plus());
    diag.insert(diag.end(), static_cast<std::size_t>(tj), s.weight_minus());
    return DensityMatrix(ComplexMatrix::diagonal(diag), static_cast<std::size_t>(s.j.dim_a()), 2);
}

namespace {

inline std::size_t product_row(int tj, int two_ma, int ib) {
    return static_cast<std::size_t>((tj - two_ma) / 2) * 2 + static_cast<std::size_t>(ib);
}

// Adds weight * |J,m><J,m| expanded over the two product components.
void add_projector(ComplexMatrix& rho, int tj, const CGPair& cg, double weight) {
    const bool has_a = cg.a != 0.0;
    const bool has_b = cg.b != 0.0;
    const std::size_t pa = has_a ? product_row(tj, cg.two_m - 1, 0) : 0;
    const std::size_t pb = has_b ? product_row(tj, cg.two_m + 1, 1) : 0;
    if (has_a) rho(pa, pa) += weight * cg.a * cg.a;
    if (has_b) rho(pb, pb) += weight * cg.b * cg.b;
    if (has_a && has_b) {
        rho(pa, pb) += weight * cg.a * cg.b;
        rho(pb, pa) += weight * cg.a * cg.b;
    }
}

}  // namespace

DensityMatrix build_product_basis(const SU2InvariantState& s) {
    const int tj = s.j.value;
    ComplexMatrix rho(static_cast<std::size_t>(s.j.dim_total()),
                      static_cast<std::size_t>(s.j.dim_total()));
    for (int two_m = -(tj - 1); two_m <= tj - 1; two_m += 2)
        add_projector(rho, tj, cg_pair(s.j, two_m, Branch::minus), s.weight_minus());
    for (int two_m = -(tj + 1); two_m <= tj + 1; two_m += 2)
        add_projector(rho, tj, cg_pair(s.j, two_m, Branch::plus), s.weight_plus());
    return DensityMatrix(std::move(rho), static_cast<std::size_t>(s.j.dim_a()), 2);
}

std::pair<ComplexMatrix, ComplexMatrix> reduced_states(const SU2InvariantState& s) {
    ComplexMatrix a = ComplexMatrix::identity(static_cast<std::size_t>(s.j.dim_a()));
    a *= 1.0 / s.j.dim_a();
    ComplexMatrix b = ComplexMatrix::identity(2);
    b *= 0.5;
    return {std::move(a), std::move(b)};
}

Spectrum state_spectrum(const SU2InvariantState& s) {
    const int tj = s.j.value;
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(s.j.dim_total()));
    v.insert(v.end(), static_cast<std::size_t>(tj), s.weight_minus());
    v.insert(v.end(), static_cast<std::size_t>(tj + 2), s.weight_plus());
    return Spectrum(std::move(v));
}

}  // namespace su2d
