#pragma once

#include "su2d/analytic.hpp"
#include "su2d/oracle.hpp"

namespace su2d {

// One row of results for a single (2j, F) point.  Correlation measures come
// from the closed forms, negativity from the numeric partial transpose.
struct CorrelationReport {
    int two_j = 0;
    double F = 0.0;
    double mutual = 0.0;
    double classical = 0.0;
    double discord = 0.0;   // always mutual - classical
    double eof = 0.0;
    double negativity = 0.0;
};

CorrelationReport evaluate_state(const SU2InvariantState& s);

}  // namespace su2d
