// drive_system.hpp — sinusoidally driven two-state systems.
//
// The drive Hamiltonian is
//   H(t) = omega0*I + [[-omegaA/2, OmegaD*cos(omegaC t)],
//                      [conj(OmegaD)*cos(omegaC t), +omegaA/2]]
// with a complex Rabi amplitude OmegaD. The closed-form path is
// rotate -> RWA -> solve the rotated time-independent system -> rotate back,
// which leaves each amplitude a sum of two phase-evolution factors:
//   C1(t) = [A e^{+i OmegaPt t} + B e^{-i OmegaPt t}] e^{-i (omega0 - omegaC/2) t}
//   C2(t) = [C e^{+i OmegaPt t} + D e^{-i OmegaPt t}] e^{-i (omega0 + omegaC/2) t}
// The four phase rotational speeds appearing there are the quasi-energy
// quartet. The un-approximated problem lives in the oracle module only.
//
// Spectrum sign convention: amplitudes evolving as e^{-i w t} produce a peak
// reported at +w.

#pragma once

#include <vector>

#include "tsslab/static_system.hpp"
#include "tsslab/trace.hpp"

namespace tsslab {

class DriveSystem {
public:
    DriveSystem(double omega0, double omegaA, Complex OmegaD, double omegaC);

    double omega0() const { return omega0_; }
    double omegaA() const { return omegaA_; }
    Complex OmegaD() const { return OmegaD_; }
    double omegaC() const { return omegaC_; }

    double deltaC() const { return omegaA_ - omegaC_; }
    double OmegaPt() const { return rotated_.OmegaP(); }
    double OmegaGRt() const { return 2.0 * rotated_.OmegaP(); }

    // The time-independent system obtained by the rotation + RWA step:
    // diagonal -+deltaC/2, off-diagonal OmegaD/2, omega0 retained.
    const StaticSystem& rotated() const { return rotated_; }

private:
    double omega0_, omegaA_, omegaC_;
    Complex OmegaD_;
    StaticSystem rotated_;
};

StaticSystem rotate_rwa(const DriveSystem& sys);

// Back-rotated solution (amplitudes in the Schroedinger picture).
StateVector2 solve_driven(const DriveSystem& sys, const StateVector2& c0, double t);

// Rotating-frame solution, no back rotation; |C_x,i| == |C_i| for all t.
StateVector2 solve_rotating(const DriveSystem& sys, const StateVector2& c0, double t);

// The four constant phase rotational speeds of the two stationary launches.
struct QuasiEnergyQuartet {
    double eP_L{}, eP_H{}, eN_L{}, eN_H{};
};

QuasiEnergyQuartet quasi_energies(const DriveSystem& sys);

struct MollowTriplet {
    double center{}, red{}, blue{};
};

MollowTriplet mollow_positions(const DriveSystem& sys);

struct PxProbabilities {
    double p_plus{};
    double p_minus{};
};

// Probability of a spin-1/2 system to point along +-x, computed directly as
// |(C1 +- C2)/sqrt(2)|^2 from the back-rotated amplitudes.
PxProbabilities px_probabilities(const DriveSystem& sys, const StateVector2& c0, double t);

// Four-cosine closed form of the +-x probabilities, valid for real
// (A, B, C, D); throws validation_error otherwise.
//   P+-(t) = 1/2 + U1 cos(OmegaGRt t) +- U2 cos(omegaC t)
//               +- U3 cos((OmegaGRt - omegaC) t) +- U4 cos((OmegaGRt + omegaC) t)
struct PxCosineExpansion {
    double U1{}, U2{}, U3{}, U4{};
    double OmegaGRt{}, omegaC{};

    double plus(double t) const;
    double minus(double t) const;
};

PxCosineExpansion px_cosine_expansion(const DriveSystem& sys, const StateVector2& c0,
                                      double real_tol = 1e-12);

// Trace sampling over a uniform grid.
AmplitudeTrace sample_driven(const DriveSystem& sys, const StateVector2& c0, const TimeGrid& grid);
AmplitudeTrace sample_static(const StaticSystem& sys, const StateVector2& c0, const TimeGrid& grid);

// ---- spectrum extraction ----

struct SpectralPeak {
    double frequency{}; // rad/s, e^{-i w t} reported at +w
    double magnitude{};
};

struct DenseSpectrum {
    std::vector<double> frequency; // ascending, two-sided
    std::vector<double> magnitude;
};

// Plain two-sided DFT magnitude of one complex series (1/N normalization).
DenseSpectrum dft_spectrum(const std::vector<Complex>& x, double dt);

// Local maxima strictly above both neighbors and above rel_threshold times
// the global maximum.
std::vector<SpectralPeak> find_peaks(const DenseSpectrum& spec, double rel_threshold = 0.10);

struct QuasiEnergySpectrum {
    std::vector<SpectralPeak> c1;
    std::vector<SpectralPeak> c2;
    double bin_width{}; // rad/s
};

// DFT peaks of C1(t) and C2(t); requires a uniform grid. For a duration of
// >= 20 generalized-Rabi periods the peaks land within one bin of the
// quasi-energy quartet.
QuasiEnergySpectrum quasi_energy_spectrum(const AmplitudeTrace& trace);

} // namespace tsslab
