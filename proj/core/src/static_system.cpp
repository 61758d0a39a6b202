#include "tsslab/static_system.hpp"

#include <cmath>

namespace tsslab {

void require_normalized(const StateVector2& c, double tol) {
    if (!std::isfinite(c.c1.real()) || !std::isfinite(c.c1.imag()) ||
        !std::isfinite(c.c2.real()) || !std::isfinite(c.c2.imag()))
        throw validation_error("state vector: non-finite amplitude");
    if (std::abs(c.norm_sq() - 1.0) > tol)
        throw validation_error("state vector: |c1|^2 + |c2|^2 != 1 (states are rejected, not renormalized)");
}

StaticSystem::StaticSystem(double omega0, double omega11, double omegaD_mag, double phiD)
    : omega0_(omega0), omega11_(omega11), omegaD_mag_(omegaD_mag), phiD_(phiD) {
    if (!std::isfinite(omega0) || !std::isfinite(omega11) || !std::isfinite(omegaD_mag) ||
        !std::isfinite(phiD))
        throw validation_error("StaticSystem: non-finite parameter");
    if (omegaD_mag < 0.0)
        throw validation_error("StaticSystem: |omega_D| must be >= 0");
    OmegaP_ = std::hypot(omega11_, omegaD_mag_);
    thetaR_ = theta_r(omega11_, omegaD_mag_);

    Mat2 h12;
    h12(0, 0) = -omega11_;
    h12(0, 1) = omegaD_mag_ * std::polar(1.0, -phiD_);
    h12(1, 0) = omegaD_mag_ * std::polar(1.0, +phiD_);
    h12(1, 1) = +omega11_;
    eigensystem_ = eig2_hermitian(h12);
}

Mat2 StaticSystem::hamiltonian() const {
    Mat2 h;
    h(0, 0) = omega0_ - omega11_;
    h(0, 1) = omegaD_mag_ * std::polar(1.0, -phiD_);
    h(1, 0) = omegaD_mag_ * std::polar(1.0, +phiD_);
    h(1, 1) = omega0_ + omega11_;
    return h;
}

VectorSymmetry classify(const Vec2& v, double tol) {
    const bool real_parts = std::abs(v[0].imag()) <= tol && std::abs(v[1].imag()) <= tol;
    if (!real_parts) return VectorSymmetry::complex_phase;
    const double a = v[0].real();
    const double b = v[1].real();
    if (a >= -tol && b >= -tol) return VectorSymmetry::symm;
    if (a * b < 0.0) return VectorSymmetry::asym;
    return VectorSymmetry::symm; // one of the pair is (numerically) zero
}

StateVector2 solve_matrix(const StaticSystem& sys, const StateVector2& c0, double t) {
    require_normalized(c0);
    const EigenSystem2& es = sys.eigensystem();
    const Mat2 xi = es.vectors;
    const Mat2 xidag = adjoint(xi);

    Vec2 d = xidag * Vec2{c0.c1, c0.c2};
    d[0] *= std::exp(-kImag * es.values[0] * t);
    d[1] *= std::exp(-kImag * es.values[1] * t);
    Vec2 c = xi * d;
    const Complex global = std::exp(-kImag * sys.omega0() * t);
    return {global * c[0], global * c[1]};
}

ABCDCoefficients abcd_coefficients(const StaticSystem& sys, const StateVector2& c0) {
    require_normalized(c0);
    const double c = std::cos(sys.thetaR());
    const double s = std::sin(sys.thetaR());
    const Complex em = std::polar(1.0, -sys.phiD());
    const Complex ep = std::polar(1.0, +sys.phiD());

    ABCDCoefficients out;
    out.A = c * c * c0.c1 - c * s * em * c0.c2;
    out.B = s * s * c0.c1 + c * s * em * c0.c2;
    out.C = -c * s * ep * c0.c1 + s * s * c0.c2;
    out.D = c * s * ep * c0.c1 + c * c * c0.c2;
    return out;
}

StateVector2 solve_abcd(const StaticSystem& sys, const ABCDCoefficients& k, double t) {
    const Complex plus = std::exp(+kImag * sys.OmegaP() * t);
    const Complex minus = std::exp(-kImag * sys.OmegaP() * t);
    const Complex global = std::exp(-kImag * sys.omega0() * t);
    return {(k.A * plus + k.B * minus) * global, (k.C * plus + k.D * minus) * global};
}

Probabilities2 probabilities(const ABCDCoefficients& k, double OmegaP, double t) {
    const Complex rot = std::exp(+kImag * 2.0 * OmegaP * t);
    Probabilities2 out;
    out.p1 = std::norm(k.A) + std::norm(k.B) + 2.0 * (k.A * std::conj(k.B) * rot).real();
    out.p2 = std::norm(k.C) + std::norm(k.D) + 2.0 * (k.C * std::conj(k.D) * rot).real();
    return out;
}

DefiniteEnergies definite_energies(const StaticSystem& sys) {
    return {sys.omega0() + sys.OmegaP(), sys.omega0() - sys.OmegaP()};
}

StateVector2 to_eigenbasis(const StaticSystem& sys, const StateVector2& c) {
    require_normalized(c);
    const Vec2 d = adjoint(sys.eigensystem().vectors) * Vec2{c.c1, c.c2};
    return {d[0], d[1]};
}

StateVector2 from_eigenbasis(const StaticSystem& sys, const StateVector2& d) {
    const Vec2 c = sys.eigensystem().vectors * Vec2{d.c1, d.c2};
    return {c[0], c[1]};
}

double average_energy(const StaticSystem& sys, const StateVector2& c0, AverageEnergyRoute route) {
    require_normalized(c0);
    switch (route) {
    case AverageEnergyRoute::weighted: {
        const StateVector2 d = to_eigenbasis(sys, c0);
        const DefiniteEnergies e = definite_energies(sys);
        return std::norm(d.c1) * e.EP + std::norm(d.c2) * e.EN;
    }
    case AverageEnergyRoute::bracket: {
        const Mat2 h = sys.hamiltonian();
        const Vec2 hc = h * Vec2{c0.c1, c0.c2};
        return (std::conj(c0.c1) * hc[0] + std::conj(c0.c2) * hc[1]).real();
    }
    case AverageEnergyRoute::density_canonical: {
        // tr(rho H) spelled out in the canonical basis.
        const double w0 = sys.omega0();
        const double w11 = sys.omega11();
        const Complex h21 = sys.omegaD_mag() * std::polar(1.0, sys.phiD());
        return std::norm(c0.c1) * (w0 - w11) + std::norm(c0.c2) * (w0 + w11) +
               2.0 * (c0.c1 * std::conj(c0.c2) * h21).real();
    }
    case AverageEnergyRoute::density_eigen: {
        const StateVector2 d = to_eigenbasis(sys, c0);
        const Mat2 rho = pure_density(d);
        const DefiniteEnergies e = definite_energies(sys);
        return (rho(0, 0) * e.EP + rho(1, 1) * e.EN).real();
    }
    }
    throw validation_error("average_energy: unknown route tag");
}

double modulation_depth(const StaticSystem& sys) {
    const double d2 = sys.omegaD_mag() * sys.omegaD_mag();
    const double denom = sys.omega11() * sys.omega11() + d2;
    if (denom == 0.0) return 0.0;
    return d2 / denom;
}

Mat2 pure_density(const StateVector2& c) {
    Mat2 rho;
    rho(0, 0) = c.c1 * std::conj(c.c1);
    rho(0, 1) = c.c1 * std::conj(c.c2);
    rho(1, 0) = c.c2 * std::conj(c.c1);
    rho(1, 1) = c.c2 * std::conj(c.c2);
    return rho;
}

} // namespace tsslab
