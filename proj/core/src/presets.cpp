#include "tsslab/presets.hpp"

#include <cmath>

namespace tsslab {

using namespace constants;

double to_microelectronvolts(double omega_rad_s) { return hbar_eVs * omega_rad_s * 1e6; }

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "proton-static", "ammonia-free", "ammonia-dc",   "waveguides",
        "proton-driven", "cesium-clock", "ammonia-driven"};
    return names;
}

StaticSystem preset_proton_static(double B_tesla) {
    if (!(B_tesla > 0.0)) throw validation_error("proton-static: B must be positive");
    return StaticSystem(0.0, gamma_p * B_tesla, 0.0, 0.0);
}

StaticSystem preset_free_ammonia(double omega0) {
    return StaticSystem(omega0, 0.0, omega_b_ammonia, pi);
}

double ammonia_omega_E(double E0_V_per_m) { return mu_E_ammonia * E0_V_per_m / hbar_Js; }

StaticSystem preset_ammonia_staticE(double E0_V_per_m, double omega0) {
    if (E0_V_per_m < 0.0) throw validation_error("ammonia-dc: E0 must be >= 0");
    // H(0,0) = +omega_E raises |1>, so the stored omega11 parameter is -omega_E.
    return StaticSystem(omega0, -ammonia_omega_E(E0_V_per_m), omega_b_ammonia, pi);
}

WaveguideSystem::WaveguideSystem(double betaL, double betaR, double Keff)
    : betaL_(betaL), betaR_(betaR), Keff_(Keff) {
    if (!(Keff > 0.0)) throw validation_error("waveguides: Keff must be positive");
    if (betaR < betaL) throw validation_error("waveguides: deltaBeta = (betaR - betaL)/2 must be >= 0");
    OmegaP_ = std::hypot(deltaBeta(), Keff_);
}

Mat2 WaveguideSystem::hamiltonian() const {
    Mat2 h;
    h(0, 0) = betaAvg() - deltaBeta();
    h(0, 1) = Keff_;
    h(1, 0) = Keff_;
    h(1, 1) = betaAvg() + deltaBeta();
    return h;
}

WaveguideSystem preset_waveguides(double betaL, double betaR, double Keff) {
    return WaveguideSystem(betaL, betaR, Keff);
}

namespace {
// beta_avg for 0.8 um vacuum wavelength and core index ~1.502; the gap
// results never depend on it (it is a global phase speed).
constexpr double kWaveguideBetaAvg = 2.0 * pi * 1.5021 / 0.8e-3; // mm^-1
} // namespace

WaveguideSystem preset_waveguides_equal() {
    return WaveguideSystem(kWaveguideBetaAvg, kWaveguideBetaAvg, 0.63);
}

WaveguideSystem preset_waveguides_unequal() {
    // deltaBeta implied by the documented 2.5 mm^-1 wavenumber gap at
    // Keff = 0.71 mm^-1.
    const double keff = 0.71;
    const double half_gap = 2.5 / 2.0;
    const double dbeta = std::sqrt(half_gap * half_gap - keff * keff);
    return WaveguideSystem(kWaveguideBetaAvg - dbeta, kWaveguideBetaAvg + dbeta, keff);
}

Vec2 evolve_waveguides(const WaveguideSystem& wg, const Vec2& A0, double z_mm) {
    // dA/dz = +i H A, so A(z) = U(-z) A0 with the quantum-sign propagator.
    const Mat2 u = propagator(wg.hamiltonian(), -z_mm);
    return u * A0;
}

std::pair<double, double> waveguide_powers(const Vec2& a) {
    return {std::norm(a[0]), std::norm(a[1])};
}

DriveSystem preset_driven_proton(double Bz_tesla, double Bx_base_tesla, double G,
                                 double deltaC_frac) {
    if (!(Bz_tesla > 0.0) || !(Bx_base_tesla > 0.0) || !(G > 0.0) || deltaC_frac < 0.0)
        throw validation_error("proton-driven: fields and gain must be positive");
    const double omegaA = 2.0 * gamma_p * Bz_tesla;
    // Off-diagonal entries are -OmegaD*cos(wC t); gamma_p/2 reproduces the
    // documented mu_p*B_x/hbar operating value (0.8e8 rad/s at G = 2e5).
    const Complex OmegaD = -(gamma_p / 2.0) * G * Bx_base_tesla;
    const double omegaC = omegaA * (1.0 - deltaC_frac);
    return DriveSystem(0.0, omegaA, OmegaD, omegaC);
}

DriveSystem preset_cesium(double G, double deltaC_frac) {
    if (!(G > 0.0)) throw validation_error("cesium-clock: gain must be positive");
    const double omegaA = omega_eg_cesium;
    const Complex OmegaD = G * cesium_rabi_unit; // phi_D = 0
    const double omegaC = omegaA * (1.0 - deltaC_frac);
    return DriveSystem(0.0, omegaA, OmegaD, omegaC);
}

Mat2 ammonia_eta_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    Mat2 eta;
    eta(0, 0) = -r; // eta_P
    eta(1, 0) = r;
    eta(0, 1) = r; // eta_N
    eta(1, 1) = r;
    return eta;
}

Mat2 ammonia_lab_hamiltonian(double G, double omegaC, double t) {
    const double omegaA = 2.0 * pi * 23.786e9;
    const double drive = G * omega_D_ammonia * std::cos(omegaC * t);
    Mat2 h;
    h(0, 0) = -drive;
    h(0, 1) = -omegaA / 2.0;
    h(1, 0) = -omegaA / 2.0;
    h(1, 1) = +drive;
    return h;
}

DriveSystem preset_driven_ammonia(double G, double deltaC_frac, double omega0,
                                  AmmoniaDriveReading reading) {
    if (!(G > 0.0)) throw validation_error("ammonia-driven: gain must be positive");
    const double omegaA = 2.0 * pi * 23.786e9;
    if (omega0 < 0.0) omega0 = 1.2 * omegaA / 2.0;
    const double factor = (reading == AmmoniaDriveReading::figure) ? 2.0 : 1.0;
    // In the eta basis (lower eigenstate first) the diagonal drive appears as
    // a transverse coupling of amplitude G*omega_D.
    const Complex OmegaD = factor * G * omega_D_ammonia;
    const double omegaC = omegaA * (1.0 - deltaC_frac);
    return DriveSystem(omega0, omegaA, OmegaD, omegaC);
}

} // namespace tsslab
