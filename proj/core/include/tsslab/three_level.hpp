// three_level.hpp — coupling-probe simulations on three atomic levels.
//
// Two lower levels |g>, |e> form the TSS, coupled by a strong field near
// their resonance; a weak probe drives either |e>->|r> (probe_e) or
// |g>->|r> (probe_g). After the rotating-frame transformation and the RWA
// the Hamiltonian is time-independent and only detunings and dipole
// magnitudes matter, so desk-scale dimensionless parameters are faithful.
//
// Spontaneous emission is not modeled.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "tsslab/complex_linalg.hpp"
#include "tsslab/static_system.hpp"

namespace tsslab {

enum class ProbeScenario { probe_e, probe_g };

struct ThreeLevelConfig {
    double omega_eg{};  // lower gap, rad/s
    double omega_re{};  // upper gap, rad/s
    Complex D_C{};      // coupling dipole element
    Complex D_P{};      // probe dipole element (D_PE or D_PG per scenario)
    double omega_C{};   // coupling frequency
    double omega_P{};   // probe frequency
    ProbeScenario scenario{ProbeScenario::probe_e};
    Vec3 c0{};          // normalized initial state

    double deltaC() const { return omega_eg - omega_C; }
    double deltaPE() const { return omega_re - omega_P; }
    double deltaPg() const { return (omega_eg + omega_re) - omega_P; }
    // The probe detuning relevant to the active scenario.
    double probe_detuning() const {
        return scenario == ProbeScenario::probe_e ? deltaPE() : deltaPg();
    }
};

void require_normalized(const Vec3& c, double tol = 1e-12);

// Rotating-frame RWA Hamiltonian. probe_e has +deltaC/2 in entry (2,2),
// probe_g has -deltaC/2 there.
Mat3 build_rwa_hamiltonian(const ThreeLevelConfig& cfg);

// One-shot evolution; for sweeps use ThreeLevelPropagator.
Vec3 evolve3(const ThreeLevelConfig& cfg, double t);

class ThreeLevelPropagator {
public:
    explicit ThreeLevelPropagator(const ThreeLevelConfig& cfg);

    Vec3 at(double t) const;
    double population_r(double t) const;
    const EigenSystem3& eigensystem() const { return es_; }
    // Smallest nonzero eigenvalue gap (0 when fully degenerate).
    double slow_gap() const;

private:
    EigenSystem3 es_;
    Vec3 d0_{};
};

// The 2x2 coupling-only block (probe decoupled), as a StaticSystem:
// omega11 = deltaC/2, |omega_D| = |D_C|/2.
StaticSystem coupling_block(double deltaC, Complex D_C);

// Initial state from a coupling-block eigenvector, upper level unpopulated.
// symm = true picks the "P" (Symm for real positive D_C) eigenvector.
Vec3 eigenstate_init(double deltaC, Complex D_C, bool symm);

// Predicted sweep-peak center for an eigenstate-initiated run: the probe
// detuning at which transfer to |r> is resonant, lambda -+ deltaC/2
// (minus for probe_e, plus for probe_g), with lambda = +-OmegaGR22/2.
double predicted_center(ProbeScenario scenario, double deltaC, Complex D_C, bool symm);

struct LorentzianFit {
    double center{};
    double Q{}; // half width, > 0
    double amplitude{};
    double residual_rms{};
};

// Thrown when the fit iteration budget is exhausted; carries the best fit.
struct fit_error : convergence_error {
    LorentzianFit best_so_far;
    fit_error(const std::string& what, LorentzianFit best)
        : convergence_error(what), best_so_far(best) {}
};

// Least-squares fit of amplitude * Q^2 / (Q^2 + (x - center)^2) by
// derivative-free simplex minimization, seeded from (argmax, half-max
// width, peak height). Exhausting the iteration budget throws fit_error.
LorentzianFit fit_lorentzian(std::span<const double> x, std::span<const double> y,
                             int max_iterations = 2000);

struct ProbeSweepResult {
    std::vector<double> detunings;
    std::vector<double> max_population_r;
    std::vector<LorentzianFit> fits; // one per detected peak
    ProbeScenario scenario{};
    std::string init_label;
};

// Max upper-level population over the sampled horizon, per probe detuning.
// horizon <= 0 selects 4*pi/Omega_slow per point (two full transfer cycles),
// sampled at `samples` points.
ProbeSweepResult sweep_probe(const ThreeLevelConfig& tmpl, double det_lo, double det_hi,
                             std::size_t n_points, double horizon = 0.0,
                             std::size_t samples = 2000);

// Max |C_r|^2 at one probe detuning, with a parabolic refinement of the
// sampled crest.
double max_population_r(const ThreeLevelConfig& cfg, double horizon = 0.0,
                        std::size_t samples = 2000);

struct LinewidthRow {
    double deltaC{};
    double D_C{};
    double D_P{};
    ProbeScenario scenario{};
    bool symm{};
    LorentzianFit fit;
};

// Fitted Q over a small parameter grid; trends are reported, not asserted.
std::vector<LinewidthRow> linewidth_study(std::span<const double> deltaC_values,
                                          std::span<const double> DC_values,
                                          std::span<const double> DP_values,
                                          ProbeScenario scenario,
                                          std::size_t sweep_points = 301,
                                          std::size_t samples = 1200);

} // namespace tsslab
