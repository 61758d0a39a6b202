// report.hpp — aggregated energy gaps and quasi-energy splits for the named
// presets, with the documented literature values alongside for diffing.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsslab/presets.hpp"

namespace tsslab {

struct EnergyReportRow {
    std::string preset;
    std::string quantity;           // e.g. "gap", "doublet_split"
    std::string note;               // operating-point description
    double value{};                 // rad/s, or mm^-1 for waveguides
    std::string value_unit;         // "rad/s" or "mm^-1"
    std::optional<double> ueV;      // conversion, absent for waveguides
    std::optional<double> quoted;   // documented value, in `quoted_unit`
    std::string quoted_unit;
};

struct EnergyReport {
    std::vector<EnergyReportRow> rows;
};

// Report for one preset name ("proton-static", ..., "waveguides"), or for
// every preset when name == "all". Unknown names throw validation_error
// listing the valid identifiers.
EnergyReport energy_report(const std::string& preset_name);

} // namespace tsslab
