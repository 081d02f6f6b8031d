#include "su2d/report.hpp"

namespace su2d {

CorrelationReport evaluate_state(const SU2InvariantState& s) {
    CorrelationReport r;
    r.two_j = s.j.value;
    r.F = s.F;
    r.mutual = mutual_information(s);
    r.classical = classical_correlations(s);
    r.discord = r.mutual - r.classical;
    r.eof = entanglement_of_formation(s);
    r.negativity = negativity(build_product_basis(s));
    return r;
}

}  // namespace su2d
