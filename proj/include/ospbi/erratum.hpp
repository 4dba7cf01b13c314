#pragma once

#include <string>
#include <vector>

namespace ospbi {

// One display in the source text whose printed form disagrees with the form
// forced by the surrounding definitions. Both values are computed at call
// time from the library, not hard-coded: computed_value comes from the
// corrected reading (and its independent cross-check), printed_value from
// evaluating the printed form at the same point.
struct ErratumFinding {
    std::string id;
    std::string statement;   // what the printed form says
    std::string correction;  // the reading the verifier establishes
    std::string context;     // concrete evaluation point for the two values
    std::string printed_value;
    std::string computed_value;
};

std::vector<ErratumFinding> erratum_findings();

}  // namespace ospbi
