// Integration tests for the tsslab binary: every CLI path must be a thin
// driver over the library, so its outputs are compared against direct calls.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "tsslab/drive_system.hpp"
#include "tsslab/presets.hpp"
#include "tsslab/report.hpp"

using namespace tsslab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code{};
    std::string stdout_text;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("tsslab_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const fs::path out_file = scratch_dir() / "stdout.txt";
    const std::string cmd = env_prefix + std::string(TSSLAB_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    result.stdout_text = ss.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("cli: energy-report values equal direct library calls") {
    const CliResult r = run_cli("energy-report --preset all");
    REQUIRE(r.exit_code == 0);
    const json parsed = json::parse(r.stdout_text);
    const EnergyReport direct = energy_report("all");
    REQUIRE(parsed.at("rows").size() == direct.rows.size());
    for (std::size_t i = 0; i < direct.rows.size(); ++i) {
        const json& row = parsed.at("rows").at(i);
        CHECK(row.at("preset").get<std::string>() == direct.rows[i].preset);
        CHECK(row.at("value").get<double>() == direct.rows[i].value);
        if (direct.rows[i].ueV) CHECK(row.at("ueV").get<double>() == *direct.rows[i].ueV);
    }
}

TEST_CASE("cli: evolve output matches the library and is byte-identical across runs") {
    const fs::path dir = scratch_dir();
    const fs::path cfg_path = dir / "evolve.json";
    write_file(cfg_path, R"({
      "preset": "cesium-clock",
      "preset_args": {"G": 1.0, "deltaC_frac": 0.0},
      "initial_state": {"kind": "canonical", "index": 1},
      "time_grid": {"t_start": 0.0, "t_end": 4.0e-5, "n": 501},
      "outputs": ["trace", "probabilities", "energies"],
      "output_dir": ")" + (dir / "run_a").string() + R"(",
      "label": "cs"
    })");

    REQUIRE(run_cli("evolve --config " + cfg_path.string()).exit_code == 0);
    const std::string trace_a = slurp(dir / "run_a" / "cs_trace.csv");

    // byte-identical second run
    REQUIRE(run_cli("evolve --config " + cfg_path.string() + " --set output_dir=\"" +
                    (dir / "run_b").string() + "\"")
                .exit_code == 0);
    CHECK(trace_a == slurp(dir / "run_b" / "cs_trace.csv"));

    // matches a direct library computation row by row
    const DriveSystem sys = preset_cesium(1.0, 0.0);
    const AmplitudeTrace direct =
        sample_driven(sys, StateVector2{1.0, 0.0}, TimeGrid{0.0, 4.0e-5, 501});
    std::stringstream expected;
    direct.to_csv(expected);
    CHECK(trace_a == expected.str());

    // energies JSON carries the quasi-energy quartet
    const json energies = json::parse(slurp(dir / "run_a" / "cs_energies.json"));
    const QuasiEnergyQuartet q = quasi_energies(sys);
    CHECK(energies.at("eP_L_rad_s").get<double>() == q.eP_L);
    CHECK(energies.at("doublet_split_ueV").get<double>() ==
          to_microelectronvolts(sys.OmegaGRt()));
}

TEST_CASE("cli: the echoed config reproduces identical outputs (round trip)") {
    const fs::path dir = scratch_dir();
    const fs::path cfg_path = dir / "round.json";
    write_file(cfg_path, R"({
      "system": {"kind": "driven", "omega0": 0.1, "omegaA": 5.0, "OmegaD": [0.3, 0.1], "omegaC": 4.7},
      "initial_state": {"kind": "eigen_P"},
      "time_grid": {"t_start": 0.0, "t_end": 40.0, "n": 301},
      "outputs": ["trace"],
      "output_dir": ")" + (dir / "round_a").string() + R"(",
      "label": "rt"
    })");
    REQUIRE(run_cli("evolve --config " + cfg_path.string()).exit_code == 0);

    // re-run from the echoed config, only redirecting the output directory
    const fs::path echoed = dir / "round_a" / "rt_config.json";
    REQUIRE(run_cli("evolve --config " + echoed.string() + " --set output_dir=\"" +
                    (dir / "round_b").string() + "\"")
                .exit_code == 0);
    CHECK(slurp(dir / "round_a" / "rt_trace.csv") == slurp(dir / "round_b" / "rt_trace.csv"));
}

TEST_CASE("cli: spectrum of a written trace matches the library peaks") {
    const fs::path dir = scratch_dir();
    const fs::path cfg_path = dir / "spec.json";
    // aligned system: 20 Rabi periods, quartet on exact bins
    write_file(cfg_path, R"({
      "system": {"kind": "driven", "omega0": 0.0, "omegaA": 6.283185307179586,
                 "OmegaD": [0.6283185307179586, 0.0], "omegaC": 6.283185307179586},
      "initial_state": {"kind": "eigen_P"},
      "time_grid": {"t_start": 0.0, "t_end": 199.8046875, "n": 1024},
      "outputs": ["trace", "spectrum"],
      "output_dir": ")" + (dir / "spec_out").string() + R"(",
      "label": "sp"
    })");
    REQUIRE(run_cli("evolve --config " + cfg_path.string()).exit_code == 0);

    const CliResult r =
        run_cli("spectrum --trace-csv " + (dir / "spec_out" / "sp_trace.csv").string(),
                "TSSLAB_OUT=" + (dir / "spec_out").string() + " ");
    REQUIRE(r.exit_code == 0);

    std::ifstream trace_in(dir / "spec_out" / "sp_trace.csv");
    const AmplitudeTrace trace = AmplitudeTrace::from_csv(trace_in);
    const QuasiEnergySpectrum spec = quasi_energy_spectrum(trace);
    REQUIRE(spec.c1.size() == 1);
    REQUIRE(spec.c2.size() == 1);

    std::stringstream expected;
    expected << "component,frequency_rad_s,magnitude\n";
    expected << "c1," << format_number(spec.c1[0].frequency) << ','
             << format_number(spec.c1[0].magnitude) << '\n';
    expected << "c2," << format_number(spec.c2[0].frequency) << ','
             << format_number(spec.c2[0].magnitude) << '\n';
    CHECK(r.stdout_text == expected.str());
}

TEST_CASE("cli: exit codes for usage and validation errors") {
    CHECK(run_cli("energy-report --preset no-such-thing").exit_code == 2);
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);

    const fs::path dir = scratch_dir();
    const fs::path bad_state = dir / "bad_state.json";
    write_file(bad_state, R"({
      "preset": "cesium-clock",
      "initial_state": {"kind": "explicit", "c": [[0.9, 0.0], [0.1, 0.0]]},
      "time_grid": {"t_start": 0.0, "t_end": 1.0e-6, "n": 11},
      "outputs": ["trace"],
      "output_dir": ")" + (dir / "bad_out").string() + R"(",
      "label": "bad"
    })");
    CHECK(run_cli("evolve --config " + bad_state.string()).exit_code == 2);

    const fs::path bad_grid = dir / "bad_grid.json";
    write_file(bad_grid, R"({
      "preset": "cesium-clock",
      "time_grid": {"t_start": 1.0, "t_end": 0.0, "n": 11},
      "outputs": ["trace"],
      "label": "bad2"
    })");
    CHECK(run_cli("evolve --config " + bad_grid.string()).exit_code == 2);
}

TEST_CASE("cli: TSSLAB_OUT provides the default output directory") {
    const fs::path dir = scratch_dir();
    const fs::path cfg_path = dir / "envtest.json";
    write_file(cfg_path, R"({
      "preset": "ammonia-free",
      "initial_state": {"kind": "eigen_N"},
      "time_grid": {"t_start": 0.0, "t_end": 1.0e-10, "n": 21},
      "outputs": ["probabilities"],
      "label": "envrun"
    })");
    const fs::path env_dir = dir / "env_out";
    REQUIRE(run_cli("evolve --config " + cfg_path.string(),
                    "TSSLAB_OUT=" + env_dir.string() + " ")
                .exit_code == 0);
    CHECK(fs::exists(env_dir / "envrun_probabilities.csv"));
}

TEST_CASE("cli: waveguide preset emits conserved powers") {
    const fs::path dir = scratch_dir();
    const fs::path cfg_path = dir / "wg.json";
    write_file(cfg_path, R"({
      "preset": "waveguides",
      "preset_args": {"equal": 1},
      "time_grid": {"t_start": 0.0, "t_end": 10.0, "n": 101},
      "outputs": ["energies"],
      "output_dir": ")" + (dir / "wg_out").string() + R"(",
      "label": "wg"
    })");
    REQUIRE(run_cli("evolve --config " + cfg_path.string()).exit_code == 0);
    const json energies = json::parse(slurp(dir / "wg_out" / "wg_energies.json"));
    CHECK(energies.at("gap_mm^-1").get<double>() == preset_waveguides_equal().OmegaGR());

    std::ifstream powers(dir / "wg_out" / "wg_powers.csv");
    std::string header;
    std::getline(powers, header);
    CHECK(header == "z_mm,P_L,P_R");
    std::string line;
    while (std::getline(powers, line)) {
        std::stringstream row(line);
        std::string z, pl, pr;
        std::getline(row, z, ',');
        std::getline(row, pl, ',');
        std::getline(row, pr, ',');
        CHECK(std::abs(std::stod(pl) + std::stod(pr) - 1.0) < 1e-12);
    }
}
