// oracle.hpp — brute-force integration of the full time-dependent
// Schroedinger equation dC/dt = -i H(t) C, with no rotating frame and no RWA.
//
// Fixed-step classical RK4. Norm drift is never repaired; it is the error
// signal. A run whose drift exceeds 1e-6 aborts with convergence_error
// (step too coarse). A properly resolved run stays below 1e-9.

#pragma once

#include <functional>

#include "tsslab/drive_system.hpp"
#include "tsslab/static_system.hpp"
#include "tsslab/trace.hpp"

namespace tsslab {

struct IntegratorSpec {
    double dt{};
    double t_end{};
    std::size_t record_stride{1};
    // Largest frequency present in the Hamiltonian (carrier, not envelope);
    // dt must satisfy dt <= 2*pi/(50*omega_max).
    double omega_max{};

    // dt = 2*pi/(steps_per_period * omega_max).
    static IntegratorSpec resolve(double omega_max, double t_end,
                                  std::size_t steps_per_period = 256,
                                  std::size_t record_stride = 1);
};

void require_valid(const IntegratorSpec& spec);

using Hamiltonian2Fn = std::function<Mat2(double)>;
using Hamiltonian3Fn = std::function<Mat3(double)>;

AmplitudeTrace integrate_tdse(const Hamiltonian2Fn& h_of_t, const Vec2& c0,
                              const IntegratorSpec& spec);
AmplitudeTrace integrate_tdse(const Hamiltonian3Fn& h_of_t, const Vec3& c0,
                              const IntegratorSpec& spec);

// Max per-component deviation between the oracle trace and the closed-form
// solve over n_periods generalized-Rabi periods.
double tih_deviation(const StaticSystem& sys, const StateVector2& c0, double n_periods = 20.0,
                     std::size_t steps_per_period = 2048);

// Full-TDSE vs back-rotated RWA populations over n_periods Rabi periods.
struct RwaFidelity {
    double drive_ratio{};   // |OmegaD| / omegaA
    double max_abs_error{}; // max |p_oracle - p_rwa| over the run
    double bound{};         // 5 * drive_ratio
};

RwaFidelity rwa_fidelity(const DriveSystem& sys, const StateVector2& c0, double n_periods = 10.0,
                         std::size_t steps_per_carrier = 1024);

// Direct integration of the diagonal-drive ammonia Hamiltonian (dimensionless
// units, all frequencies / omegaA), measuring the population-envelope
// frequency and reporting it against both candidate drive readings.
struct AmmoniaArbitration {
    double G{};
    double deltaC_frac{};
    double measured_split{};      // rad/s
    double predicted_single{};    // sqrt(deltaC^2 + (G wD)^2)
    double predicted_double{};    // sqrt(deltaC^2 + (2 G wD)^2)
    double step_halving_ratio{};  // ~16 for a 4th-order scheme
    double norm_drift{};
};

AmmoniaArbitration arbitrate_ammonia_factor(double G, double deltaC_frac,
                                            double n_envelope_periods = 12.0,
                                            std::size_t steps_per_carrier = 1024);

} // namespace tsslab
