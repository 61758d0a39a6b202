#include "tsslab/drive_system.hpp"

#include <cmath>

namespace tsslab {

namespace {

StaticSystem make_rotated(double omega0, double omegaA, Complex OmegaD, double omegaC) {
    const double deltaC = omegaA - omegaC;
    const double mag = std::abs(OmegaD) / 2.0;
    // Rotated H(0,1) = OmegaD/2 = |omega_D| e^{-i phiD}  =>  phiD = -arg(OmegaD).
    const double phiD = (mag > 0.0) ? -std::arg(OmegaD) : 0.0;
    return StaticSystem(omega0, deltaC / 2.0, mag, phiD);
}

} // namespace

DriveSystem::DriveSystem(double omega0, double omegaA, Complex OmegaD, double omegaC)
    : omega0_(omega0), omegaA_(omegaA), omegaC_(omegaC), OmegaD_(OmegaD),
      rotated_(make_rotated(omega0, omegaA, OmegaD, omegaC)) {
    if (!std::isfinite(omegaA) || !std::isfinite(omegaC) || !std::isfinite(OmegaD.real()) ||
        !std::isfinite(OmegaD.imag()))
        throw validation_error("DriveSystem: non-finite parameter");
}

StaticSystem rotate_rwa(const DriveSystem& sys) { return sys.rotated(); }

StateVector2 solve_rotating(const DriveSystem& sys, const StateVector2& c0, double t) {
    return solve_matrix(sys.rotated(), c0, t);
}

StateVector2 solve_driven(const DriveSystem& sys, const StateVector2& c0, double t) {
    // C_x(0) = C(0); back rotation applies diag(e^{+i wC t/2}, e^{-i wC t/2}).
    const StateVector2 cx = solve_rotating(sys, c0, t);
    const Complex up = std::exp(+kImag * 0.5 * sys.omegaC() * t);
    return {up * cx.c1, std::conj(up) * cx.c2};
}

QuasiEnergyQuartet quasi_energies(const DriveSystem& sys) {
    const double lo = sys.omega0() - 0.5 * sys.omegaC();
    const double hi = sys.omega0() + 0.5 * sys.omegaC();
    const double w = sys.OmegaPt();
    return {lo + w, hi + w, lo - w, hi - w};
}

MollowTriplet mollow_positions(const DriveSystem& sys) {
    const double wc = sys.omegaC();
    const double gr = sys.OmegaGRt();
    return {wc, wc - gr, wc + gr};
}

PxProbabilities px_probabilities(const DriveSystem& sys, const StateVector2& c0, double t) {
    const StateVector2 c = solve_driven(sys, c0, t);
    const Complex ap = (c.c1 + c.c2) / std::sqrt(2.0);
    const Complex am = (c.c1 - c.c2) / std::sqrt(2.0);
    return {std::norm(ap), std::norm(am)};
}

double PxCosineExpansion::plus(double t) const {
    return 0.5 + U1 * std::cos(OmegaGRt * t) + U2 * std::cos(omegaC * t) +
           U3 * std::cos((OmegaGRt - omegaC) * t) + U4 * std::cos((OmegaGRt + omegaC) * t);
}

double PxCosineExpansion::minus(double t) const {
    return 0.5 + U1 * std::cos(OmegaGRt * t) - U2 * std::cos(omegaC * t) -
           U3 * std::cos((OmegaGRt - omegaC) * t) - U4 * std::cos((OmegaGRt + omegaC) * t);
}

PxCosineExpansion px_cosine_expansion(const DriveSystem& sys, const StateVector2& c0,
                                      double real_tol) {
    const ABCDCoefficients k = abcd_coefficients(sys.rotated(), c0);
    const double scale = std::max({std::abs(k.A), std::abs(k.B), std::abs(k.C), std::abs(k.D), 1.0});
    if (std::abs(k.A.imag()) > real_tol * scale || std::abs(k.B.imag()) > real_tol * scale ||
        std::abs(k.C.imag()) > real_tol * scale || std::abs(k.D.imag()) > real_tol * scale)
        throw validation_error("px_cosine_expansion: (A,B,C,D) must be real; "
                               "use px_probabilities for the complex case");
    const double a = k.A.real(), b = k.B.real(), c = k.C.real(), d = k.D.real();
    PxCosineExpansion e;
    e.U1 = a * b + c * d;
    e.U2 = a * c + b * d;
    e.U3 = b * c;
    e.U4 = a * d;
    e.OmegaGRt = sys.OmegaGRt();
    e.omegaC = sys.omegaC();
    return e;
}

AmplitudeTrace sample_driven(const DriveSystem& sys, const StateVector2& c0, const TimeGrid& grid) {
    require_valid(grid);
    std::vector<double> t(grid.n);
    std::vector<Complex> c1(grid.n), c2(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        t[i] = grid.at(i);
        const StateVector2 c = solve_driven(sys, c0, t[i]);
        c1[i] = c.c1;
        c2[i] = c.c2;
    }
    return AmplitudeTrace(std::move(t), std::move(c1), std::move(c2));
}

AmplitudeTrace sample_static(const StaticSystem& sys, const StateVector2& c0, const TimeGrid& grid) {
    require_valid(grid);
    std::vector<double> t(grid.n);
    std::vector<Complex> c1(grid.n), c2(grid.n);
    const ABCDCoefficients k = abcd_coefficients(sys, c0);
    for (std::size_t i = 0; i < grid.n; ++i) {
        t[i] = grid.at(i);
        const StateVector2 c = solve_abcd(sys, k, t[i]);
        c1[i] = c.c1;
        c2[i] = c.c2;
    }
    return AmplitudeTrace(std::move(t), std::move(c1), std::move(c2));
}

DenseSpectrum dft_spectrum(const std::vector<Complex>& x, double dt) {
    if (x.size() < 2) throw validation_error("dft_spectrum: need at least 2 samples");
    if (!(dt > 0.0)) throw validation_error("dft_spectrum: dt must be positive");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
    const double base = 2.0 * std::acos(-1.0) / (static_cast<double>(n) * dt);

    DenseSpectrum out;
    out.frequency.reserve(x.size());
    out.magnitude.reserve(x.size());
    for (std::ptrdiff_t k = -(n / 2); k < n - n / 2; ++k) {
        const double w = base * static_cast<double>(k);
        const Complex step = std::exp(+kImag * w * dt);
        Complex phase = 1.0;
        Complex acc = 0.0;
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            acc += x[static_cast<std::size_t>(i)] * phase;
            phase *= step;
        }
        out.frequency.push_back(w);
        out.magnitude.push_back(std::abs(acc) / static_cast<double>(n));
    }
    return out;
}

std::vector<SpectralPeak> find_peaks(const DenseSpectrum& spec, double rel_threshold) {
    std::vector<SpectralPeak> peaks;
    if (spec.magnitude.size() < 3) return peaks;
    double global = 0.0;
    for (double m : spec.magnitude) global = std::max(global, m);
    const double floor = rel_threshold * global;
    for (std::size_t i = 1; i + 1 < spec.magnitude.size(); ++i) {
        const double m = spec.magnitude[i];
        if (m > floor && m > spec.magnitude[i - 1] && m > spec.magnitude[i + 1])
            peaks.push_back({spec.frequency[i], m});
    }
    return peaks;
}

QuasiEnergySpectrum quasi_energy_spectrum(const AmplitudeTrace& trace) {
    const double dt = trace.dt(); // validates uniformity
    QuasiEnergySpectrum out;
    const DenseSpectrum s1 = dft_spectrum(trace.c1(), dt);
    const DenseSpectrum s2 = dft_spectrum(trace.c2(), dt);
    out.c1 = find_peaks(s1);
    out.c2 = find_peaks(s2);
    out.bin_width = s1.frequency[1] - s1.frequency[0];
    return out;
}

} // namespace tsslab
