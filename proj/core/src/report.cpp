#include "tsslab/report.hpp"

#include <cmath>

namespace tsslab {

namespace {

EnergyReportRow rad_row(std::string preset, std::string quantity, std::string note, double omega,
                        double quoted_ueV) {
    EnergyReportRow row;
    row.preset = std::move(preset);
    row.quantity = std::move(quantity);
    row.note = std::move(note);
    row.value = omega;
    row.value_unit = "rad/s";
    row.ueV = to_microelectronvolts(omega);
    row.quoted = quoted_ueV;
    row.quoted_unit = "ueV";
    return row;
}

EnergyReportRow wg_row(std::string quantity, std::string note, double value, double quoted) {
    EnergyReportRow row;
    row.preset = "waveguides";
    row.quantity = std::move(quantity);
    row.note = std::move(note);
    row.value = value;
    row.value_unit = "mm^-1";
    row.quoted = quoted;
    row.quoted_unit = "mm^-1";
    return row;
}

void append_preset(EnergyReport& report, const std::string& name) {
    if (name == "proton-static") {
        const StaticSystem sys = preset_proton_static();
        report.rows.push_back(
            rad_row(name, "gap", "B = 3 T", sys.OmegaGR(), 1.056));
    } else if (name == "ammonia-free") {
        const StaticSystem sys = preset_free_ammonia();
        report.rows.push_back(rad_row(name, "gap", "inversion doublet", sys.OmegaGR(), 98.4));
    } else if (name == "ammonia-dc") {
        const StaticSystem sys = preset_ammonia_staticE();
        report.rows.push_back(
            rad_row(name, "gap", "E0 = 2.36e-2 V/m", sys.OmegaGR(), 98.4));
    } else if (name == "waveguides") {
        report.rows.push_back(wg_row("gap", "equal pair, Keff = 0.63 mm^-1",
                                     preset_waveguides_equal().OmegaGR(), 1.26));
        report.rows.push_back(wg_row("gap", "unequal pair, Keff = 0.71 mm^-1",
                                     preset_waveguides_unequal().OmegaGR(), 2.5));
    } else if (name == "proton-driven") {
        const DriveSystem amplified = preset_driven_proton();
        report.rows.push_back(rad_row(name, "gap", "unperturbed, B_z = 3 T",
                                      amplified.omegaA(), 1.056));
        report.rows.push_back(rad_row(name, "doublet_split", "G = 2e5, deltaC = 0.06*omegaA",
                                      amplified.OmegaGRt(), 0.083));
        const DriveSystem typical = preset_driven_proton(3.0, 3.0e-6, 1.0, 0.0);
        report.rows.push_back(rad_row(name, "doublet_split", "typical field, on resonance",
                                      typical.OmegaGRt(), 2.6e-7));
    } else if (name == "cesium-clock") {
        const DriveSystem amplified = preset_cesium();
        report.rows.push_back(rad_row(name, "gap", "hyperfine transition",
                                      amplified.omegaA(), 38.0));
        report.rows.push_back(rad_row(name, "doublet_split", "G = 1e4, deltaC = 0.06*omega_eg",
                                      amplified.OmegaGRt(), 3.1));
        const DriveSystem typical = preset_cesium(1.0, 0.0);
        report.rows.push_back(rad_row(name, "doublet_split", "typical field, on resonance",
                                      typical.OmegaGRt(), 2.1e-4));
    } else if (name == "ammonia-driven") {
        const DriveSystem conj = preset_driven_ammonia();
        report.rows.push_back(rad_row(name, "gap", "inversion doublet", conj.omegaA(), 98.4));
        report.rows.push_back(rad_row(name, "doublet_split",
                                      "G = 2e6, deltaC = 0.06*omegaA, conjugation reading",
                                      conj.OmegaGRt(), 9.5));
        const DriveSystem fig =
            preset_driven_ammonia(2.0e6, 0.06, -1.0, AmmoniaDriveReading::figure);
        report.rows.push_back(rad_row(name, "doublet_split",
                                      "G = 2e6, deltaC = 0.06*omegaA, figure reading",
                                      fig.OmegaGRt(), 9.5));
        const DriveSystem conj_typ =
            preset_driven_ammonia(1.0, 0.0, -1.0, AmmoniaDriveReading::conjugation);
        report.rows.push_back(rad_row(name, "doublet_split",
                                      "typical field, on resonance, conjugation reading",
                                      conj_typ.OmegaGRt(), 3.7e-6));
        const DriveSystem fig_typ =
            preset_driven_ammonia(1.0, 0.0, -1.0, AmmoniaDriveReading::figure);
        report.rows.push_back(rad_row(name, "doublet_split",
                                      "typical field, on resonance, figure reading",
                                      fig_typ.OmegaGRt(), 3.7e-6));
    } else {
        std::string valid;
        for (const auto& n : preset_names()) valid += " " + n;
        throw validation_error("unknown preset '" + name + "'; valid names:" + valid);
    }
}

} // namespace

EnergyReport energy_report(const std::string& preset_name) {
    EnergyReport report;
    if (preset_name == "all") {
        for (const auto& name : preset_names()) append_preset(report, name);
    } else {
        append_preset(report, preset_name);
    }
    return report;
}

} // namespace tsslab
