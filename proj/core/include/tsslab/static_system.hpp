// static_system.hpp — time-independent two-state systems.
//
// A StaticSystem is the four-parameter Hamiltonian
//   H = omega0*I + [[-omega11, |omegaD|*e^{-i phiD}], [|omegaD|*e^{+i phiD}, +omega11]]
// (all frequencies in rad/s, hbar = 1). omega11 follows the convention that
// the stored parameter is positive when H(0,0) is negative; pass a negative
// omega11 to put a positive value on H(0,0).
//
// Two solution routes are provided and kept deliberately independent:
// the eigendecomposition route (solve_matrix) and the closed-form
// (A, B, C, D) constants route (abcd_coefficients / solve_abcd). They must
// agree pointwise to 1e-12, which the test suite enforces on randomized
// systems.

#pragma once

#include <utility>

#include "tsslab/complex_linalg.hpp"

namespace tsslab {

struct StateVector2 {
    Complex c1{};
    Complex c2{};

    double norm_sq() const { return std::norm(c1) + std::norm(c2); }
};

// Rejects non-normalized states instead of repairing them; normalization
// errors usually indicate caller bugs.
void require_normalized(const StateVector2& c, double tol = 1e-12);

class StaticSystem {
public:
    StaticSystem(double omega0, double omega11, double omegaD_mag, double phiD);

    double omega0() const { return omega0_; }
    double omega11() const { return omega11_; }
    double omegaD_mag() const { return omegaD_mag_; }
    double phiD() const { return phiD_; }

    double OmegaP() const { return OmegaP_; }
    double OmegaN() const { return -OmegaP_; }
    // Generalized Rabi flopping frequency, lambda_P - lambda_N = 2*OmegaP.
    double OmegaGR() const { return 2.0 * OmegaP_; }
    double thetaR() const { return thetaR_; }

    // Eigensystem of the traceless coupling part: values are {+OmegaP, -OmegaP};
    // the full-Hamiltonian eigenvalues are omega0 +- OmegaP.
    const EigenSystem2& eigensystem() const { return eigensystem_; }
    Vec2 xiP() const { return eigensystem_.column(0); }
    Vec2 xiN() const { return eigensystem_.column(1); }

    // Full Hamiltonian including the omega0 global term.
    Mat2 hamiltonian() const;

private:
    double omega0_, omega11_, omegaD_mag_, phiD_;
    double OmegaP_, thetaR_;
    EigenSystem2 eigensystem_;
};

// The four time-independent constants of the closed-form solution:
//   C1(t) = [A e^{+i OmegaP t} + B e^{-i OmegaP t}] e^{-i omega0 t}
//   C2(t) = [C e^{+i OmegaP t} + D e^{-i OmegaP t}] e^{-i omega0 t}
// A+B == C1(0) and C+D == C2(0) by construction.
struct ABCDCoefficients {
    Complex A{}, B{}, C{}, D{};
};

struct Probabilities2 {
    double p1{};
    double p2{};
};

struct DefiniteEnergies {
    double EP{}; // omega0 + OmegaP
    double EN{}; // omega0 - OmegaP
};

enum class AverageEnergyRoute {
    weighted,          // |D_P|^2 w_P + |D_N|^2 w_N in the eigenbasis
    bracket,           // C^dag H C
    density_canonical, // tr(rho H) with rho in the canonical basis
    density_eigen,     // tr(rho_xi H_xi) with both in the eigenbasis
};

// Symm: both components real (to 1e-12) with non-negative real parts,
// Asym: real with opposite signs, complex_phase: everything else
// (phiD outside {0, pi}).
enum class VectorSymmetry { symm, asym, complex_phase };

VectorSymmetry classify(const Vec2& v, double tol = 1e-12);

StateVector2 solve_matrix(const StaticSystem& sys, const StateVector2& c0, double t);

ABCDCoefficients abcd_coefficients(const StaticSystem& sys, const StateVector2& c0);

StateVector2 solve_abcd(const StaticSystem& sys, const ABCDCoefficients& coeffs, double t);

// General complex-coefficient expression; oscillates at exactly 2*OmegaP.
Probabilities2 probabilities(const ABCDCoefficients& coeffs, double OmegaP, double t);

DefiniteEnergies definite_energies(const StaticSystem& sys);

// D = Xi^dagger * C (amplitudes in the definite-energy basis) and back.
StateVector2 to_eigenbasis(const StaticSystem& sys, const StateVector2& c);
StateVector2 from_eigenbasis(const StaticSystem& sys, const StateVector2& d);

double average_energy(const StaticSystem& sys, const StateVector2& c0, AverageEnergyRoute route);

// Lorentzian in omega11 with HWHM |omegaD|; defined as 0 when the system is
// fully degenerate (no coupling, no transfer).
double modulation_depth(const StaticSystem& sys);

// rho = C C^dagger for a pure state.
Mat2 pure_density(const StateVector2& c);

} // namespace tsslab
