// complex_linalg.hpp — small dense complex matrices and Hermitian eigensolvers.
//
// Everything here is sized for two- and three-state problems: a closed-form
// 2x2 Hermitian solver (trace/2 ± sqrt(w11^2 + |wD|^2) with the theta_R
// eigenvector parameterization) and a cyclic complex-Jacobi 3x3 solver.
// Eigenvalues are always returned in descending order, so index 0 is the "P"
// branch and the last index is the "N" branch. Each eigenvector column is
// phase-fixed: its first component of magnitude > 1e-12 is made real and
// non-negative, which makes results comparable across solvers.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "tsslab/errors.hpp"

namespace tsslab {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> m{};

    Complex& operator()(std::size_t r, std::size_t c) { return m[r * N + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m[r * N + c]; }

    static Matrix identity() {
        Matrix out;
        for (std::size_t i = 0; i < N; ++i) out(i, i) = 1.0;
        return out;
    }
};

template <std::size_t N>
using Vector = std::array<Complex, N>;

using Mat2 = Matrix<2>;
using Mat3 = Matrix<3>;
using Vec2 = Vector<2>;
using Vec3 = Vector<3>;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& a, const Matrix<N>& b) {
    Matrix<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < N; ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& a, const Vector<N>& v) {
    Vector<N> out{};
    for (std::size_t r = 0; r < N; ++r) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < N; ++k) acc += a(r, k) * v[k];
        out[r] = acc;
    }
    return out;
}

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& a) {
    Matrix<N> out;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) out(r, c) = std::conj(a(c, r));
    return out;
}

template <std::size_t N>
double max_abs(const Matrix<N>& a) {
    double out = 0.0;
    for (const auto& z : a.m) out = std::max(out, std::abs(z));
    return out;
}

// Eigenvalues sorted descending; `vectors` is unitary with column k paired
// with values[k].
template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values{};
    Matrix<N> vectors;

    Vector<N> column(std::size_t k) const {
        Vector<N> out{};
        for (std::size_t r = 0; r < N; ++r) out[r] = vectors(r, k);
        return out;
    }
};

using EigenSystem2 = EigenSystem<2>;
using EigenSystem3 = EigenSystem<3>;

// Throws validation_error unless every entry is finite, the diagonal is real
// and a(i,j) == conj(a(j,i)) to 1e-14 relative.
void require_hermitian(const Mat2& h);
void require_hermitian(const Mat3& h);

// Decomposition of a Hermitian 2x2 into the four-parameter form
//   avg*I + [[-w11, wD*e^{-i phiD}], [wD*e^{+i phiD}, +w11]].
struct TwoLevelParams {
    double avg;        // trace/2
    double omega11;    // (h11 - h00)/2
    double omegaD_mag; // |h10|
    double phiD;       // arg(h10); 0 when the coupling vanishes
    double OmegaP;     // sqrt(omega11^2 + omegaD_mag^2)
    double thetaR;     // 0.5*acos(omega11/OmegaP) in [0, pi/2]; 0 when OmegaP == 0
};

TwoLevelParams two_level_params(const Mat2& h);

// theta_R branch used everywhere: acos into [0, pi/2]; the degenerate
// OmegaP == 0 case returns 0.
double theta_r(double omega11, double omegaD_mag);

// Multiplies v by a unit phase so its first component of magnitude > 1e-12
// (if any) becomes real and non-negative.
template <std::size_t N>
void fix_global_phase(Vector<N>& v);

EigenSystem2 eig2_hermitian(const Mat2& h);

// Cyclic complex Jacobi. Converged when the largest off-diagonal magnitude
// drops below 1e-13 times the largest diagonal magnitude; throws
// convergence_error after 100 sweeps (never expected for Hermitian input).
EigenSystem3 eig3_hermitian(const Mat3& h);

// U(t) = V * diag(e^{-i lambda_k t}) * V^dagger for Hermitian h.
Mat2 propagator(const Mat2& h, double t);
Mat3 propagator(const Mat3& h, double t);

} // namespace tsslab
