#pragma once

#include <string>
#include <vector>

// Reference suite of worked cases with independently known answers: fixed
// small ensembles with closed-form divergences and bounds, channel families
// with exact capacities, oscillator entropy values and the thermal witness
// construction.  Each check records what was expected, what was computed
// and whether it passed at its stated tolerance.

namespace holevo {

struct GoldenCheck {
    std::string group;
    std::string name;
    std::string relation;  // "=", "<=" or ">=" (computed vs expected)
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

std::vector<GoldenCheck> run_golden_suite();

}  // namespace holevo
