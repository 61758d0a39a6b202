// tsslab — command-line front end.
//
// Subcommands: energy-report, evolve, sweep-probe, spectrum, oracle-check,
// linewidths. All physics lives in the library; this file only parses
// configuration, dispatches, and serializes results. Exit codes: 0 success,
// 2 validation/usage error, 3 numerical-convergence failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsslab/oracle.hpp"
#include "tsslab/presets.hpp"
#include "tsslab/report.hpp"
#include "tsslab/three_level.hpp"

using nlohmann::json;
using namespace tsslab;

namespace {

namespace fs = std::filesystem;

std::string default_output_dir() {
    if (const char* env = std::getenv("TSSLAB_OUT")) return env;
    return ".";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error("config parse error in " + path + ": " + e.what());
    }
    return j;
}

// Dotted-path override: "a.b.c=value"; the value is parsed as JSON when
// possible, otherwise taken as a string.
void apply_set(json& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw validation_error("--set expects key=value, got: " + assignment);
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    json value;
    try {
        value = json::parse(raw);
    } catch (const json::exception&) {
        value = raw;
    }
    json* node = &config;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot - start);
        if (key.empty()) throw validation_error("--set: empty key segment in " + path);
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path path = dir / name;
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path.string());
    return out;
}

// ---- run configuration (evolve / spectrum) ----

struct RunConfig {
    std::string preset;     // empty for inline systems
    json preset_args = json::object();
    json system;            // inline system description, null when preset set
    json initial_state = {{"kind", "canonical"}, {"index", 1}};
    TimeGrid grid{0.0, 1.0, 1001};
    std::vector<std::string> outputs = {"trace", "probabilities"};
    std::string output_dir = default_output_dir();
    std::string label = "run";
};

RunConfig parse_run_config(const json& j) {
    RunConfig cfg;
    if (j.contains("preset")) cfg.preset = j.at("preset").get<std::string>();
    if (j.contains("preset_args")) cfg.preset_args = j.at("preset_args");
    if (j.contains("system")) cfg.system = j.at("system");
    if (cfg.preset.empty() && cfg.system.is_null())
        throw validation_error("run config: need either \"preset\" or \"system\"");
    if (j.contains("initial_state")) cfg.initial_state = j.at("initial_state");
    if (j.contains("time_grid")) {
        const json& g = j.at("time_grid");
        cfg.grid = TimeGrid{g.at("t_start").get<double>(), g.at("t_end").get<double>(),
                            g.at("n").get<std::size_t>()};
    }
    if (j.contains("outputs")) cfg.outputs = j.at("outputs").get<std::vector<std::string>>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("label")) cfg.label = j.at("label").get<std::string>();
    require_valid(cfg.grid);
    return cfg;
}

json run_config_to_json(const RunConfig& cfg) {
    json j;
    if (!cfg.preset.empty()) j["preset"] = cfg.preset;
    if (!cfg.preset_args.empty()) j["preset_args"] = cfg.preset_args;
    if (!cfg.system.is_null()) j["system"] = cfg.system;
    j["initial_state"] = cfg.initial_state;
    j["time_grid"] = {{"t_start", cfg.grid.t_start}, {"t_end", cfg.grid.t_end}, {"n", cfg.grid.n}};
    j["outputs"] = cfg.outputs;
    j["output_dir"] = cfg.output_dir;
    j["label"] = cfg.label;
    return j;
}

using SystemVariant = std::variant<StaticSystem, DriveSystem, WaveguideSystem>;

double arg_or(const json& args, const char* key, double fallback) {
    return args.contains(key) ? args.at(key).get<double>() : fallback;
}

SystemVariant build_system(const RunConfig& cfg) {
    if (!cfg.preset.empty()) {
        const json& a = cfg.preset_args;
        if (cfg.preset == "proton-static") return preset_proton_static(arg_or(a, "B", 3.0));
        if (cfg.preset == "ammonia-free") return preset_free_ammonia(arg_or(a, "omega0", 3e11));
        if (cfg.preset == "ammonia-dc")
            return preset_ammonia_staticE(arg_or(a, "E0", 2.36e-2), arg_or(a, "omega0", 3e11));
        if (cfg.preset == "waveguides") {
            if (a.contains("betaL"))
                return preset_waveguides(a.at("betaL").get<double>(), a.at("betaR").get<double>(),
                                         a.at("Keff").get<double>());
            return arg_or(a, "equal", 1.0) != 0.0 ? preset_waveguides_equal()
                                                  : preset_waveguides_unequal();
        }
        if (cfg.preset == "proton-driven")
            return preset_driven_proton(arg_or(a, "Bz", 3.0), arg_or(a, "Bx", 3e-6),
                                        arg_or(a, "G", 2e5), arg_or(a, "deltaC_frac", 0.06));
        if (cfg.preset == "cesium-clock")
            return preset_cesium(arg_or(a, "G", 1e4), arg_or(a, "deltaC_frac", 0.06));
        if (cfg.preset == "ammonia-driven") {
            const std::string reading =
                a.contains("reading") ? a.at("reading").get<std::string>() : "conjugation";
            if (reading != "conjugation" && reading != "figure")
                throw validation_error("ammonia-driven reading must be conjugation or figure");
            return preset_driven_ammonia(arg_or(a, "G", 2e6), arg_or(a, "deltaC_frac", 0.06),
                                         arg_or(a, "omega0", -1.0),
                                         reading == "figure" ? AmmoniaDriveReading::figure
                                                             : AmmoniaDriveReading::conjugation);
        }
        std::string valid;
        for (const auto& n : preset_names()) valid += " " + n;
        throw validation_error("unknown preset '" + cfg.preset + "'; valid names:" + valid);
    }

    const json& s = cfg.system;
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "static")
        return StaticSystem(s.at("omega0").get<double>(), s.at("omega11").get<double>(),
                            s.at("omegaD_mag").get<double>(), s.at("phiD").get<double>());
    if (kind == "driven") {
        const auto& d = s.at("OmegaD");
        return DriveSystem(s.at("omega0").get<double>(), s.at("omegaA").get<double>(),
                           Complex{d.at(0).get<double>(), d.at(1).get<double>()},
                           s.at("omegaC").get<double>());
    }
    if (kind == "waveguides")
        return WaveguideSystem(s.at("betaL").get<double>(), s.at("betaR").get<double>(),
                               s.at("Keff").get<double>());
    throw validation_error("system.kind must be static, driven or waveguides");
}

StateVector2 resolve_initial_state(const json& init, const StaticSystem& rotated_or_static) {
    const std::string kind = init.at("kind").get<std::string>();
    if (kind == "canonical") {
        const int index = init.at("index").get<int>();
        if (index == 1) return {1.0, 0.0};
        if (index == 2) return {0.0, 1.0};
        throw validation_error("initial_state.index must be 1 or 2");
    }
    if (kind == "eigen_P") {
        const Vec2 xi = rotated_or_static.xiP();
        return {xi[0], xi[1]};
    }
    if (kind == "eigen_N") {
        const Vec2 xi = rotated_or_static.xiN();
        return {xi[0], xi[1]};
    }
    if (kind == "explicit") {
        const auto& c = init.at("c");
        const StateVector2 state{Complex{c.at(0).at(0).get<double>(), c.at(0).at(1).get<double>()},
                                 Complex{c.at(1).at(0).get<double>(), c.at(1).at(1).get<double>()}};
        require_normalized(state); // validated, not repaired
        return state;
    }
    throw validation_error("initial_state.kind must be canonical, eigen_P, eigen_N or explicit");
}

json report_to_json(const EnergyReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = {{"preset", row.preset},   {"quantity", row.quantity},
                  {"note", row.note},       {"value", row.value},
                  {"unit", row.value_unit}, {"quoted_unit", row.quoted_unit}};
        if (row.ueV) r["ueV"] = *row.ueV;
        if (row.quoted) r["quoted"] = *row.quoted;
        rows.push_back(std::move(r));
    }
    return json{{"rows", rows}};
}

void write_peaks_csv(std::ostream& os, const QuasiEnergySpectrum& spec) {
    os << "component,frequency_rad_s,magnitude\n";
    for (const auto& p : spec.c1)
        os << "c1," << format_number(p.frequency) << ',' << format_number(p.magnitude) << '\n';
    for (const auto& p : spec.c2)
        os << "c2," << format_number(p.frequency) << ',' << format_number(p.magnitude) << '\n';
}

// ---- subcommand drivers ----

int cmd_energy_report(const std::string& preset, const std::string& json_path) {
    const json out = report_to_json(energy_report(preset.empty() ? "all" : preset));
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw validation_error("cannot open output file: " + json_path);
        f << out.dump(2) << '\n';
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_evolve(const RunConfig& cfg) {
    const SystemVariant sys = build_system(cfg);
    const fs::path dir = cfg.output_dir;
    auto wants = [&](const char* what) {
        return std::find(cfg.outputs.begin(), cfg.outputs.end(), what) != cfg.outputs.end();
    };

    // echo the exact configuration next to the data
    {
        auto f = open_output(dir, cfg.label + "_config.json");
        f << run_config_to_json(cfg).dump(2) << '\n';
    }

    if (std::holds_alternative<WaveguideSystem>(sys)) {
        const auto& wg = std::get<WaveguideSystem>(sys);
        auto f = open_output(dir, cfg.label + "_powers.csv");
        f << "z_mm,P_L,P_R\n";
        for (std::size_t i = 0; i < cfg.grid.n; ++i) {
            const double z = cfg.grid.at(i);
            const auto [pl, pr] = waveguide_powers(evolve_waveguides(wg, Vec2{1.0, 0.0}, z));
            f << format_number(z) << ',' << format_number(pl) << ',' << format_number(pr) << '\n';
        }
        if (wants("energies")) {
            auto e = open_output(dir, cfg.label + "_energies.json");
            e << json{{"K_P_mm^-1", wg.KP()},
                      {"K_N_mm^-1", wg.KN()},
                      {"gap_mm^-1", wg.OmegaGR()}}
                     .dump(2)
              << '\n';
        }
        return 0;
    }

    AmplitudeTrace trace;
    json energies;
    if (std::holds_alternative<StaticSystem>(sys)) {
        const auto& st = std::get<StaticSystem>(sys);
        const StateVector2 c0 = resolve_initial_state(cfg.initial_state, st);
        trace = sample_static(st, c0, cfg.grid);
        const DefiniteEnergies e = definite_energies(st);
        energies = {{"E_P_rad_s", e.EP},
                    {"E_N_rad_s", e.EN},
                    {"E_P_ueV", to_microelectronvolts(e.EP)},
                    {"E_N_ueV", to_microelectronvolts(e.EN)},
                    {"gap_ueV", to_microelectronvolts(st.OmegaGR())}};
    } else {
        const auto& dr = std::get<DriveSystem>(sys);
        const StateVector2 c0 = resolve_initial_state(cfg.initial_state, dr.rotated());
        trace = sample_driven(dr, c0, cfg.grid);
        const QuasiEnergyQuartet q = quasi_energies(dr);
        const MollowTriplet m = mollow_positions(dr);
        energies = {{"eP_L_rad_s", q.eP_L},
                    {"eP_H_rad_s", q.eP_H},
                    {"eN_L_rad_s", q.eN_L},
                    {"eN_H_rad_s", q.eN_H},
                    {"doublet_split_rad_s", dr.OmegaGRt()},
                    {"doublet_split_ueV", to_microelectronvolts(dr.OmegaGRt())},
                    {"mollow_center_rad_s", m.center},
                    {"mollow_red_rad_s", m.red},
                    {"mollow_blue_rad_s", m.blue}};
    }

    if (wants("trace")) {
        auto f = open_output(dir, cfg.label + "_trace.csv");
        trace.to_csv(f);
    }
    if (wants("probabilities")) {
        auto f = open_output(dir, cfg.label + "_probabilities.csv");
        f << "t,p1,p2,p_plus,p_minus\n";
        for (std::size_t i = 0; i < trace.size(); ++i) {
            const Complex c1 = trace.c1()[i], c2 = trace.c2()[i];
            const double pp = std::norm((c1 + c2) / std::sqrt(2.0));
            const double pm = std::norm((c1 - c2) / std::sqrt(2.0));
            f << format_number(trace.t()[i]) << ',' << format_number(std::norm(c1)) << ','
              << format_number(std::norm(c2)) << ',' << format_number(pp) << ','
              << format_number(pm) << '\n';
        }
    }
    if (wants("energies")) {
        auto f = open_output(dir, cfg.label + "_energies.json");
        f << energies.dump(2) << '\n';
    }
    if (wants("spectrum")) {
        auto f = open_output(dir, cfg.label + "_spectrum.csv");
        write_peaks_csv(f, quasi_energy_spectrum(trace));
    }
    return 0;
}

int cmd_spectrum(const std::string& trace_csv, const std::optional<RunConfig>& cfg) {
    AmplitudeTrace trace;
    fs::path dir = default_output_dir();
    std::string label = "spectrum";
    if (!trace_csv.empty()) {
        std::ifstream in(trace_csv);
        if (!in) throw validation_error("cannot open trace file: " + trace_csv);
        trace = AmplitudeTrace::from_csv(in);
        label = fs::path(trace_csv).stem().string();
    } else if (cfg) {
        const SystemVariant sys = build_system(*cfg);
        if (!std::holds_alternative<DriveSystem>(sys))
            throw validation_error("spectrum: config must describe a driven system");
        const auto& dr = std::get<DriveSystem>(sys);
        trace = sample_driven(dr, resolve_initial_state(cfg->initial_state, dr.rotated()),
                              cfg->grid);
        dir = cfg->output_dir;
        label = cfg->label;
    } else {
        throw validation_error("spectrum: need --trace-csv or --config");
    }
    const QuasiEnergySpectrum spec = quasi_energy_spectrum(trace);
    auto f = open_output(dir, label + "_peaks.csv");
    write_peaks_csv(f, spec);
    write_peaks_csv(std::cout, spec);
    return 0;
}

struct SweepOptions {
    std::string scenario = "probe_e";
    std::string init = "symm"; // symm | asym | general
    double deltaC = 0.0;
    double D_C = 1.0;
    double D_P = 0.05;
    double lo = -1.2, hi = 1.2;
    std::size_t points = 601;
    std::vector<double> c0_flat; // re,im triplets for init = general
    std::string output_dir = default_output_dir();
    std::string label = "sweep";
};

SweepOptions parse_sweep_config(const json& j) {
    SweepOptions o;
    if (j.contains("scenario")) o.scenario = j.at("scenario").get<std::string>();
    if (j.contains("init")) o.init = j.at("init").get<std::string>();
    if (j.contains("deltaC")) o.deltaC = j.at("deltaC").get<double>();
    if (j.contains("D_C")) o.D_C = j.at("D_C").get<double>();
    if (j.contains("D_P")) o.D_P = j.at("D_P").get<double>();
    if (j.contains("detuning_lo")) o.lo = j.at("detuning_lo").get<double>();
    if (j.contains("detuning_hi")) o.hi = j.at("detuning_hi").get<double>();
    if (j.contains("points")) o.points = j.at("points").get<std::size_t>();
    if (j.contains("c0")) o.c0_flat = j.at("c0").get<std::vector<double>>();
    if (j.contains("output_dir")) o.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("label")) o.label = j.at("label").get<std::string>();
    return o;
}

int cmd_sweep_probe(const SweepOptions& o) {
    ThreeLevelConfig cfg;
    cfg.omega_eg = 10.0 * std::abs(o.D_C); // arbitrary ladder; detunings drive the physics
    cfg.omega_re = 12.0 * std::abs(o.D_C);
    cfg.D_C = o.D_C;
    cfg.D_P = o.D_P;
    cfg.omega_C = cfg.omega_eg - o.deltaC;
    if (o.scenario == "probe_e")
        cfg.scenario = ProbeScenario::probe_e;
    else if (o.scenario == "probe_g")
        cfg.scenario = ProbeScenario::probe_g;
    else
        throw validation_error("sweep-probe scenario must be probe_e or probe_g");

    std::string init_label = o.init;
    if (o.init == "symm" || o.init == "asym") {
        cfg.c0 = eigenstate_init(o.deltaC, cfg.D_C, o.init == "symm");
    } else if (o.init == "general") {
        if (o.c0_flat.size() != 6)
            throw validation_error("sweep-probe general init needs c0 = [re,im]x3");
        cfg.c0 = Vec3{Complex{o.c0_flat[0], o.c0_flat[1]}, Complex{o.c0_flat[2], o.c0_flat[3]},
                      Complex{o.c0_flat[4], o.c0_flat[5]}};
    } else {
        throw validation_error("sweep-probe init must be symm, asym or general");
    }

    ProbeSweepResult result = sweep_probe(cfg, o.lo, o.hi, o.points);
    result.init_label = init_label;

    const fs::path dir = o.output_dir;
    {
        auto f = open_output(dir, o.label + "_sweep.csv");
        f << "detuning_rad_s,max_pop_r,scenario,init_label\n";
        for (std::size_t i = 0; i < result.detunings.size(); ++i)
            f << format_number(result.detunings[i]) << ','
              << format_number(result.max_population_r[i]) << ',' << o.scenario << ','
              << init_label << '\n';
    }
    json fits = json::array();
    for (const auto& fit : result.fits)
        fits.push_back({{"center", fit.center},
                        {"Q", fit.Q},
                        {"amplitude", fit.amplitude},
                        {"residual_rms", fit.residual_rms}});
    const json out = {{"scenario", o.scenario}, {"init_label", init_label}, {"peaks", fits}};
    {
        auto f = open_output(dir, o.label + "_fits.json");
        f << out.dump(2) << '\n';
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_oracle_check(const std::string& preset, const std::string& json_path) {
    json out;
    if (preset == "proton-static" || preset == "ammonia-free" || preset == "ammonia-dc") {
        RunConfig rc;
        rc.preset = preset;
        const StaticSystem sys = std::get<StaticSystem>(build_system(rc));
        const double dev = tih_deviation(sys, StateVector2{1.0, 0.0}, 20.0);
        out = {{"preset", preset}, {"check", "tih_vs_closed_form"}, {"max_deviation", dev},
               {"tolerance", 1e-9}, {"pass", dev < 1e-9}};
    } else if (preset == "proton-driven" || preset == "cesium-clock") {
        // Preset-shaped rescaled system at a drive ratio inside the RWA
        // validity domain; the check is the ratio-based bound.
        const double ratio = 1e-2;
        const double deltaC_frac = (preset == "proton-driven") ? 0.06 : 0.06;
        const Complex drive = (preset == "proton-driven") ? Complex{-ratio, 0.0}
                                                          : Complex{ratio, 0.0};
        const DriveSystem shaped(0.0, 1.0, drive, 1.0 - deltaC_frac);
        const RwaFidelity fid = rwa_fidelity(shaped, StateVector2{1.0, 0.0}, 10.0, 1024);
        out = {{"preset", preset},
               {"check", "rwa_fidelity_rescaled"},
               {"drive_ratio", fid.drive_ratio},
               {"max_abs_error", fid.max_abs_error},
               {"bound", fid.bound},
               {"pass", fid.max_abs_error < fid.bound}};
    } else if (preset == "ammonia-driven") {
        const AmmoniaArbitration arb = arbitrate_ammonia_factor(2.0e6, 0.06);
        const double rel_single =
            std::abs(arb.measured_split - arb.predicted_single) / arb.predicted_single;
        const double rel_double =
            std::abs(arb.measured_split - arb.predicted_double) / arb.predicted_double;
        out = {{"preset", preset},
               {"check", "ammonia_drive_arbitration"},
               {"G", arb.G},
               {"deltaC_frac", arb.deltaC_frac},
               {"measured_split_rad_s", arb.measured_split},
               {"predicted_G_omegaD_rad_s", arb.predicted_single},
               {"predicted_2G_omegaD_rad_s", arb.predicted_double},
               {"relative_error_vs_G_omegaD", rel_single},
               {"relative_error_vs_2G_omegaD", rel_double},
               {"step_halving_ratio", arb.step_halving_ratio},
               {"norm_drift", arb.norm_drift},
               {"verdict", rel_single < rel_double ? "G*omegaD (conjugation reading)"
                                                   : "2*G*omegaD (figure reading)"}};
    } else {
        throw validation_error("oracle-check: unknown preset '" + preset + "'");
    }
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw validation_error("cannot open output file: " + json_path);
        f << out.dump(2) << '\n';
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_linewidths(const std::vector<double>& deltaC, const std::vector<double>& DC,
                   const std::vector<double>& DP, const std::string& scenario,
                   const std::string& output_dir, const std::string& label) {
    const ProbeScenario sc =
        scenario == "probe_g" ? ProbeScenario::probe_g : ProbeScenario::probe_e;
    const auto rows = linewidth_study(deltaC, DC, DP, sc);
    auto f = open_output(output_dir, label + "_linewidths.csv");
    f << "deltaC,D_C,D_P,scenario,init_label,center,Q,amplitude,residual_rms\n";
    for (const auto& r : rows)
        f << format_number(r.deltaC) << ',' << format_number(r.D_C) << ','
          << format_number(r.D_P) << ',' << scenario << ',' << (r.symm ? "symm" : "asym") << ','
          << format_number(r.fit.center) << ',' << format_number(r.fit.Q) << ','
          << format_number(r.fit.amplitude) << ',' << format_number(r.fit.residual_rms) << '\n';
    std::cout << "wrote " << rows.size() << " linewidth rows\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tsslab — two-state-system energies: closed-form dynamics, "
                 "quasi-energy structure, and full-TDSE validation"};
    app.require_subcommand(1);

    // energy-report
    auto* report_cmd = app.add_subcommand("energy-report",
                                          "Energy gaps and doublet splits per preset, with "
                                          "documented values alongside");
    std::string report_preset = "all";
    std::string report_json;
    report_cmd->add_option("--preset", report_preset, "Preset name or 'all'");
    report_cmd->add_option("--json", report_json, "Also write the report to this file");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a system and emit CSV/JSON data");
    std::string evolve_config;
    std::vector<std::string> evolve_sets;
    evolve_cmd->add_option("--config", evolve_config, "RunConfig JSON file")->required();
    evolve_cmd->add_option("--set", evolve_sets, "Override config fields (dotted.path=value)");

    // spectrum
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "Quasi-energy peaks from a trace CSV or a fresh run");
    std::string spectrum_trace, spectrum_config;
    std::vector<std::string> spectrum_sets;
    spectrum_cmd->add_option("--trace-csv", spectrum_trace, "Existing trace CSV");
    spectrum_cmd->add_option("--config", spectrum_config, "RunConfig JSON file");
    spectrum_cmd->add_option("--set", spectrum_sets, "Override config fields");

    // sweep-probe
    auto* sweep_cmd = app.add_subcommand("sweep-probe",
                                         "Three-level probe sweep: max upper-level population "
                                         "vs probe detuning, with Lorentzian fits");
    std::string sweep_config;
    std::vector<std::string> sweep_sets;
    sweep_cmd->add_option("--config", sweep_config, "Sweep config JSON file")->required();
    sweep_cmd->add_option("--set", sweep_sets, "Override config fields");

    // oracle-check
    auto* oracle_cmd = app.add_subcommand("oracle-check",
                                          "Validate closed-form paths against the full-TDSE "
                                          "integrator; arbitration for the ammonia drive");
    std::string oracle_preset = "ammonia-driven";
    std::string oracle_json;
    oracle_cmd->add_option("--preset", oracle_preset, "Preset to check");
    oracle_cmd->add_option("--json", oracle_json, "Also write the report to this file");

    // linewidths
    auto* lw_cmd = app.add_subcommand("linewidths",
                                      "Fitted Lorentzian widths over a (deltaC, D_C, D_P) grid");
    std::vector<double> lw_deltaC{0.0, 0.4};
    std::vector<double> lw_DC{0.6, 1.0, 1.6};
    std::vector<double> lw_DP{0.02, 0.05};
    std::string lw_scenario = "probe_e";
    std::string lw_dir = default_output_dir();
    std::string lw_label = "study";
    lw_cmd->add_option("--deltaC", lw_deltaC, "Coupling detunings");
    lw_cmd->add_option("--DC", lw_DC, "Coupling strengths");
    lw_cmd->add_option("--DP", lw_DP, "Probe strengths");
    lw_cmd->add_option("--scenario", lw_scenario, "probe_e or probe_g");
    lw_cmd->add_option("--out", lw_dir, "Output directory");
    lw_cmd->add_option("--label", lw_label, "Output file prefix");

    try {
        app.parse(argc, argv);

        if (report_cmd->parsed()) return cmd_energy_report(report_preset, report_json);
        if (evolve_cmd->parsed()) {
            json j = load_json_file(evolve_config);
            for (const auto& s : evolve_sets) apply_set(j, s);
            return cmd_evolve(parse_run_config(j));
        }
        if (spectrum_cmd->parsed()) {
            std::optional<RunConfig> cfg;
            if (!spectrum_config.empty()) {
                json j = load_json_file(spectrum_config);
                for (const auto& s : spectrum_sets) apply_set(j, s);
                cfg = parse_run_config(j);
            }
            return cmd_spectrum(spectrum_trace, cfg);
        }
        if (sweep_cmd->parsed()) {
            json j = load_json_file(sweep_config);
            for (const auto& s : sweep_sets) apply_set(j, s);
            return cmd_sweep_probe(parse_sweep_config(j));
        }
        if (oracle_cmd->parsed()) return cmd_oracle_check(oracle_preset, oracle_json);
        if (lw_cmd->parsed())
            return cmd_linewidths(lw_deltaC, lw_DC, lw_DP, lw_scenario, lw_dir, lw_label);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
