#include "tsslab/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tsslab {

namespace {

template <std::size_t N>
void require_hermitian_impl(const Matrix<N>& h) {
    double scale = 0.0;
    for (const auto& z : h.m) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw validation_error("hermitian check: non-finite matrix entry");
        scale = std::max(scale, std::abs(z));
    }
    const double tol = 1e-14 * std::max(scale, 1e-300);
    for (std::size_t i = 0; i < N; ++i) {
        if (std::abs(h(i, i).imag()) > tol)
            throw validation_error("hermitian check: diagonal entry has imaginary part");
        for (std::size_t j = i + 1; j < N; ++j) {
            if (std::abs(h(i, j) - std::conj(h(j, i))) > tol)
                throw validation_error("hermitian check: h(i,j) != conj(h(j,i))");
        }
    }
}

template <std::size_t N>
void sort_descending(EigenSystem<N>& es) {
    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return es.values[a] > es.values[b]; });
    EigenSystem<N> sorted;
    for (std::size_t k = 0; k < N; ++k) {
        sorted.values[k] = es.values[order[k]];
        for (std::size_t r = 0; r < N; ++r) sorted.vectors(r, k) = es.vectors(r, order[k]);
    }
    es = sorted;
}

template <std::size_t N>
void fix_column_phases(Matrix<N>& vectors) {
    for (std::size_t c = 0; c < N; ++c) {
        Vector<N> col{};
        for (std::size_t r = 0; r < N; ++r) col[r] = vectors(r, c);
        fix_global_phase(col);
        for (std::size_t r = 0; r < N; ++r) vectors(r, c) = col[r];
    }
}

} // namespace

void require_hermitian(const Mat2& h) { require_hermitian_impl(h); }
void require_hermitian(const Mat3& h) { require_hermitian_impl(h); }

template <std::size_t N>
void fix_global_phase(Vector<N>& v) {
    for (std::size_t r = 0; r < N; ++r) {
        const double mag = std::abs(v[r]);
        if (mag > 1e-12) {
            const Complex phase = std::conj(v[r]) / mag;
            for (auto& z : v) z *= phase;
            v[r] = mag; // exact, no residual imaginary dust
            return;
        }
    }
}

template void fix_global_phase<2>(Vector<2>&);
template void fix_global_phase<3>(Vector<3>&);

double theta_r(double omega11, double omegaD_mag) {
    const double OmegaP = std::hypot(omega11, omegaD_mag);
    if (OmegaP == 0.0) return 0.0;
    const double arg = std::clamp(omega11 / OmegaP, -1.0, 1.0);
    return 0.5 * std::acos(arg);
}

TwoLevelParams two_level_params(const Mat2& h) {
    require_hermitian(h);
    TwoLevelParams p{};
    p.avg = 0.5 * (h(0, 0).real() + h(1, 1).real());
    p.omega11 = 0.5 * (h(1, 1).real() - h(0, 0).real());
    p.omegaD_mag = std::abs(h(1, 0));
    p.phiD = (p.omegaD_mag > 0.0) ? std::arg(h(1, 0)) : 0.0;
    p.OmegaP = std::hypot(p.omega11, p.omegaD_mag);
    p.thetaR = theta_r(p.omega11, p.omegaD_mag);
    return p;
}

EigenSystem2 eig2_hermitian(const Mat2& h) {
    const TwoLevelParams p = two_level_params(h);
    EigenSystem2 es;
    es.values = {p.avg + p.OmegaP, p.avg - p.OmegaP};

    const double s = std::sin(p.thetaR);
    const double c = std::cos(p.thetaR);
    const Complex ph = std::polar(1.0, p.phiD);
    // xi_P = (sin thetaR, cos thetaR * e^{+i phiD}), xi_N = (cos thetaR, -sin thetaR * e^{+i phiD})
    es.vectors(0, 0) = s;
    es.vectors(1, 0) = c * ph;
    es.vectors(0, 1) = c;
    es.vectors(1, 1) = -s * ph;
    fix_column_phases(es.vectors);
    return es;
}

EigenSystem3 eig3_hermitian(const Mat3& h) {
    require_hermitian(h);
    Mat3 a = h;
    // Symmetrize away representation dust so the iteration sees an exactly
    // Hermitian matrix.
    for (std::size_t i = 0; i < 3; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < 3; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    Mat3 v = Mat3::identity();

    auto converged = [&]() {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            diag = std::max(diag, std::abs(a(i, i)));
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) off = std::max(off, std::abs(a(i, j)));
        }
        return off <= 1e-13 * diag;
    };

    int sweeps = 0;
    while (!converged()) {
        if (++sweeps > 100)
            throw convergence_error("eig3_hermitian: no convergence in 100 Jacobi sweeps");
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t q = p + 1; q < 3; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq <= 1e-300) continue;
                const Complex phase = a(p, q) / apq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Small-magnitude root of t^2 - 2*theta*t - 1 = 0, the zeroing
                // condition for this rotation convention.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? -1.0 : 1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                Mat3 rot = Mat3::identity();
                rot(p, p) = c;
                rot(p, q) = -s * phase;
                rot(q, p) = s * std::conj(phase);
                rot(q, q) = c;

                a = adjoint(rot) * a * rot;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                v = v * rot;
            }
        }
    }

    EigenSystem3 es;
    for (std::size_t i = 0; i < 3; ++i) es.values[i] = a(i, i).real();
    es.vectors = v;
    sort_descending(es);
    fix_column_phases(es.vectors);
    return es;
}

namespace {

template <std::size_t N>
Matrix<N> propagator_from(const EigenSystem<N>& es, double t) {
    Matrix<N> phases;
    for (std::size_t k = 0; k < N; ++k)
        phases(k, k) = std::exp(-kImag * es.values[k] * t);
    return es.vectors * phases * adjoint(es.vectors);
}

} // namespace

Mat2 propagator(const Mat2& h, double t) {
    if (!std::isfinite(t)) throw validation_error("propagator: non-finite time");
    return propagator_from(eig2_hermitian(h), t);
}

Mat3 propagator(const Mat3& h, double t) {
    if (!std::isfinite(t)) throw validation_error("propagator: non-finite time");
    return propagator_from(eig3_hermitian(h), t);
}

} // namespace tsslab
