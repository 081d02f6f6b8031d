#include "su2d/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace su2d {

using detail::xlog2x;

double mutual_information(const SU2InvariantState& s) {
    const int tj = s.j.value;
    double v = 1.0 + std::log2(tj + 1.0);
    if (s.F > 0.0) v += s.F * std::log2(s.F / tj);
    if (s.F < 1.0) v += (1.0 - s.F) * std::log2((1.0 - s.F) / (tj + 2));
    return v;
}

PostMeasurementSpectrum post_measurement_spectrum(const SU2InvariantState& s) {
    const int tj = s.j.value;
    const double centre = 1.0 / (tj + 1);
    const double dev = std::abs(s.F * (tj + 1) - 0.5 * tj);
    const double denom = 0.25 * tj * (tj + 2.0) * (tj + 1.0);  // j(j+1)(2j+1)
    PostMeasurementSpectrum out;
    out.values.reserve(static_cast<std::size_t>(tj + 1));
    const int n_max = tj / 2;
    for (int n = 0; n <= n_max; ++n) {
        if (tj % 2 == 0 && n == n_max) {
            // Integer j: the n = j entry is the unpaired central value.
            out.values.push_back(centre);
            break;
        }
        const double d = 0.5 * (tj - 2 * n) * dev / denom;
        // The extremes touch 0 and 1 at F = 1; keep roundoff inside [0,1].
        out.values.push_back(std::min(centre + d, 1.0));
        out.values.push_back(std::max(centre - d, 0.0));
    }
    return out;
}

namespace {

// Diagonal weights of p_k rho_k over m_a (descending), one array per outcome.
// Projecting the qubit onto up keeps the a-amplitude of each |J,m>, shifted
// to m_a = m - 1/2; onto down keeps the b-amplitude at m_a = m + 1/2.
std::pair<std::vector<double>, std::vector<double>> outcome_diagonals(const SU2InvariantState& s) {
    const int tj = s.j.value;
    std::vector<double> up(static_cast<std::size_t>(tj + 1), 0.0);
    std::vector<double> down(static_cast<std::size_t>(tj + 1), 0.0);
    const auto slot = [tj](int two_ma) { return static_cast<std::size_t>((tj - two_ma) / 2); };
    for (int two_m = -(tj - 1); two_m <= tj - 1; two_m += 2) {
        const CGPair cg = cg_pair(s.j, two_m, Branch::minus);
        up[slot(two_m - 1)] += s.weight_minus() * cg.a * cg.a;
        down[slot(two_m + 1)] += s.weight_minus() * cg.b * cg.b;
    }
    for (int two_m = -(tj + 1); two_m <= tj + 1; two_m += 2) {
        const CGPair cg = cg_pair(s.j, two_m, Branch::plus);
        if (cg.a != 0.0) up[slot(two_m - 1)] += s.weight_plus() * cg.a * cg.a;
        if (cg.b != 0.0) down[slot(two_m + 1)] += s.weight_plus() * cg.b * cg.b;
    }
    return {std::move(up), std::move(down)};
}

}  // namespace

std::pair<Spectrum, Spectrum> post_measurement_states_direct(const SU2InvariantState& s) {
    auto [up, down] = outcome_diagonals(s);
    for (double& v : up) v *= 2.0;    // each outcome has probability 1/2
    for (double& v : down) v *= 2.0;
    return {Spectrum(std::move(up)), Spectrum(std::move(down))};
}

double classical_correlations(const SU2InvariantState& s) {
    const int tj = s.j.value;
    double v = std::log2(tj + 1.0);
    for (double l : post_measurement_spectrum(s).values) v += xlog2x(l);
    return v;
}

double quantum_discord(const SU2InvariantState& s) {
    return mutual_information(s) - classical_correlations(s);
}

double discord_large_j(const SU2InvariantState& s) {
    const int tj = s.j.value;
    double v = 1.0 - std::log2(tj + 1.0) + xlog2x(s.F) + xlog2x(1.0 - s.F);
    const double centre = 1.0 / tj;
    const double slope = std::abs(2.0 * s.F - 1.0) / (static_cast<double>(tj) * tj);
    const int n_max = tj / 2;
    for (int n = 0; n <= n_max; ++n) {
        if (tj % 2 == 0 && n == n_max) {
            v -= xlog2x(centre);
            break;
        }
        const double d = (tj - 2 * n) * slope;
        v -= xlog2x(centre + d) + xlog2x(centre - d);
    }
    return v;
}

double entanglement_of_formation(const SU2InvariantState& s) {
    const int tj = s.j.value;
    if (s.F <= separability_threshold(s.j) + 1e-12) return 0.0;
    const double root = std::sqrt(s.F) - std::sqrt(tj * (1.0 - s.F));
    return binary_entropy(root * root / (tj + 1));
}

double separability_threshold(TwiceJ j) { return j.value / (j.value + 1.0); }

double discord_zero_point(TwiceJ j) { return 0.5 * separability_threshold(j); }

}  // namespace su2d
