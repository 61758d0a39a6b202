#include "tsslab/oracle.hpp"

#include <cmath>
#include <string>

#include "tsslab/presets.hpp"

namespace tsslab {

namespace {

constexpr double kTwoPi = 2.0 * constants::pi;

template <std::size_t N>
Vector<N> rhs(const Matrix<N>& h, const Vector<N>& y) {
    Vector<N> out = h * y;
    for (auto& z : out) z *= -kImag;
    return out;
}

template <std::size_t N>
double norm_sq(const Vector<N>& y) {
    double acc = 0.0;
    for (const auto& z : y) acc += std::norm(z);
    return acc;
}

template <std::size_t N>
AmplitudeTrace integrate_impl(const std::function<Matrix<N>(double)>& h_of_t, Vector<N> y,
                              const IntegratorSpec& spec) {
    require_valid(spec);
    const double nsq0 = norm_sq(y);
    if (std::abs(nsq0 - 1.0) > 1e-12)
        throw validation_error("integrate_tdse: initial state not normalized");

    // Exact step count so halving dt exactly doubles the grid.
    const double raw = spec.t_end / spec.dt;
    std::size_t n_steps = (std::abs(raw - std::round(raw)) < 1e-6)
                              ? static_cast<std::size_t>(std::llround(raw))
                              : static_cast<std::size_t>(std::ceil(raw));
    if (n_steps == 0) n_steps = 1;
    const double dt = spec.t_end / static_cast<double>(n_steps);

    std::vector<double> times;
    std::vector<Complex> c1, c2, c3;
    auto record = [&](double t, const Vector<N>& v) {
        times.push_back(t);
        c1.push_back(v[0]);
        c2.push_back(v[1]);
        if constexpr (N == 3) c3.push_back(v[2]);
    };

    record(0.0, y);
    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t = dt * static_cast<double>(step);

        const Matrix<N> h0 = h_of_t(t);
        const Matrix<N> h1 = h_of_t(t + 0.5 * dt);
        const Matrix<N> h2 = h_of_t(t + dt);

        const Vector<N> k1 = rhs(h0, y);
        Vector<N> tmp;
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        const Vector<N> k2 = rhs(h1, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        const Vector<N> k3 = rhs(h1, tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
        const Vector<N> k4 = rhs(h2, tmp);

        for (std::size_t i = 0; i < N; ++i)
            y[i] += (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        if ((step + 1) % spec.record_stride == 0 || step + 1 == n_steps) {
            const double drift = std::abs(norm_sq(y) - 1.0);
            if (drift > 1e-6)
                throw convergence_error("integrate_tdse: norm drift " + std::to_string(drift) +
                                        " exceeds 1e-6 at t = " +
                                        std::to_string(dt * static_cast<double>(step + 1)) +
                                        " (step too coarse)");
            record(dt * static_cast<double>(step + 1), y);
        }
    }
    return AmplitudeTrace(std::move(times), std::move(c1), std::move(c2), std::move(c3));
}

// |sum y_i e^{-i w t_i}| with a rotating phasor.
double magnitude_at(const std::vector<double>& y, double dt, double w) {
    const Complex step = std::exp(-kImag * w * dt);
    Complex phase = 1.0;
    Complex acc = 0.0;
    for (double v : y) {
        acc += v * phase;
        phase *= step;
    }
    return std::abs(acc);
}

// Dominant positive frequency of a real series: coarse DFT bin scan, then two
// zoom passes around the winner. Resolution ~ bin/400.
double dominant_frequency(std::vector<double> y, double dt) {
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    for (double& v : y) v -= mean;

    const std::size_t n = y.size();
    const double bin = kTwoPi / (dt * static_cast<double>(n));
    double best_w = bin;
    double best_m = -1.0;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        const double w = bin * static_cast<double>(k);
        const double m = magnitude_at(y, dt, w);
        if (m > best_m) {
            best_m = m;
            best_w = w;
        }
    }
    double span = bin;
    for (int zoom = 0; zoom < 2; ++zoom) {
        const double lo = best_w - span;
        const int pts = 41;
        for (int i = 0; i < pts; ++i) {
            const double w = lo + 2.0 * span * static_cast<double>(i) / (pts - 1);
            if (w <= 0.0) continue;
            const double m = magnitude_at(y, dt, w);
            if (m > best_m) {
                best_m = m;
                best_w = w;
            }
        }
        span /= 20.0;
    }
    return best_w;
}

} // namespace

IntegratorSpec IntegratorSpec::resolve(double omega_max, double t_end,
                                       std::size_t steps_per_period, std::size_t record_stride) {
    IntegratorSpec spec;
    spec.omega_max = omega_max;
    spec.t_end = t_end;
    spec.dt = kTwoPi / (static_cast<double>(steps_per_period) * omega_max);
    spec.record_stride = record_stride;
    return spec;
}

void require_valid(const IntegratorSpec& spec) {
    if (!(spec.dt > 0.0) || !(spec.t_end > 0.0) || !std::isfinite(spec.dt) ||
        !std::isfinite(spec.t_end))
        throw validation_error("integrator spec: dt and t_end must be positive and finite");
    if (spec.record_stride == 0)
        throw validation_error("integrator spec: record_stride must be >= 1");
    if (!(spec.omega_max > 0.0))
        throw validation_error("integrator spec: omega_max must be positive");
    if (spec.dt > kTwoPi / (50.0 * spec.omega_max) * (1.0 + 1e-12))
        throw validation_error("integrator spec: dt must resolve the carrier "
                               "(dt <= 2*pi/(50*omega_max))");
}

AmplitudeTrace integrate_tdse(const Hamiltonian2Fn& h_of_t, const Vec2& c0,
                              const IntegratorSpec& spec) {
    return integrate_impl<2>(h_of_t, c0, spec);
}

AmplitudeTrace integrate_tdse(const Hamiltonian3Fn& h_of_t, const Vec3& c0,
                              const IntegratorSpec& spec) {
    return integrate_impl<3>(h_of_t, c0, spec);
}

double tih_deviation(const StaticSystem& sys, const StateVector2& c0, double n_periods,
                     std::size_t steps_per_period) {
    if (!(sys.OmegaGR() > 0.0))
        throw validation_error("tih_deviation: degenerate system has no Rabi period");
    const double omega_max = std::abs(sys.omega0()) + sys.OmegaP();
    const double t_end = n_periods * kTwoPi / sys.OmegaGR();
    IntegratorSpec spec = IntegratorSpec::resolve(omega_max, t_end, steps_per_period);
    const std::size_t n_steps = static_cast<std::size_t>(std::ceil(t_end / spec.dt));
    spec.record_stride = std::max<std::size_t>(1, n_steps / 2048);

    const Mat2 h = sys.hamiltonian();
    const AmplitudeTrace trace =
        integrate_tdse([&](double) { return h; }, Vec2{c0.c1, c0.c2}, spec);

    double worst = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const StateVector2 exact = solve_matrix(sys, c0, trace.t()[i]);
        worst = std::max(worst, std::abs(trace.c1()[i] - exact.c1));
        worst = std::max(worst, std::abs(trace.c2()[i] - exact.c2));
    }
    return worst;
}

RwaFidelity rwa_fidelity(const DriveSystem& sys, const StateVector2& c0, double n_periods,
                         std::size_t steps_per_carrier) {
    if (!(sys.OmegaGRt() > 0.0))
        throw validation_error("rwa_fidelity: degenerate rotated system has no Rabi period");
    const double omega_max =
        std::max({std::abs(sys.omegaA()), std::abs(sys.omegaC()), std::abs(sys.OmegaD())});
    const double t_end = n_periods * kTwoPi / sys.OmegaGRt();
    IntegratorSpec spec = IntegratorSpec::resolve(omega_max, t_end, steps_per_carrier);
    const std::size_t n_steps = static_cast<std::size_t>(std::ceil(t_end / spec.dt));
    spec.record_stride = std::max<std::size_t>(1, n_steps / 8192);

    const double omega0 = sys.omega0();
    const double omegaA = sys.omegaA();
    const double omegaC = sys.omegaC();
    const Complex OmegaD = sys.OmegaD();
    auto h_of_t = [&](double t) {
        Mat2 h;
        const Complex coupling = OmegaD * std::cos(omegaC * t);
        h(0, 0) = omega0 - omegaA / 2.0;
        h(0, 1) = coupling;
        h(1, 0) = std::conj(coupling);
        h(1, 1) = omega0 + omegaA / 2.0;
        return h;
    };

    const AmplitudeTrace trace = integrate_tdse(h_of_t, Vec2{c0.c1, c0.c2}, spec);

    RwaFidelity out;
    out.drive_ratio = std::abs(sys.OmegaD()) / std::abs(sys.omegaA());
    out.bound = 5.0 * out.drive_ratio;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const StateVector2 rwa = solve_driven(sys, c0, trace.t()[i]);
        out.max_abs_error =
            std::max(out.max_abs_error, std::abs(std::norm(trace.c1()[i]) - std::norm(rwa.c1)));
        out.max_abs_error =
            std::max(out.max_abs_error, std::abs(std::norm(trace.c2()[i]) - std::norm(rwa.c2)));
    }
    return out;
}

AmmoniaArbitration arbitrate_ammonia_factor(double G, double deltaC_frac,
                                            double n_envelope_periods,
                                            std::size_t steps_per_carrier) {
    if (!(G > 0.0)) throw validation_error("arbitrate_ammonia_factor: G must be positive");

    const double omegaA = 2.0 * constants::pi * 23.786e9;
    const double a = G * constants::omega_D_ammonia / omegaA; // rescaled drive coefficient
    const double delta = deltaC_frac;
    const double omegaC = 1.0 - delta;

    AmmoniaArbitration out;
    out.G = G;
    out.deltaC_frac = deltaC_frac;
    out.predicted_single = std::hypot(delta, a) * omegaA;
    out.predicted_double = std::hypot(delta, 2.0 * a) * omegaA;

    // Diagonal-drive ammonia Hamiltonian, all frequencies / omegaA:
    // cosine drive on the diagonal, constant tunneling off-diagonal.
    auto h_of_t = [&](double t) {
        Mat2 h;
        const double drive = a * std::cos(omegaC * t);
        h(0, 0) = -drive;
        h(0, 1) = -0.5;
        h(1, 0) = -0.5;
        h(1, 1) = +drive;
        return h;
    };

    // Launch in the symmetric (lower) free-molecule eigenstate; watch the
    // antisymmetric population envelope.
    const double r = 1.0 / std::sqrt(2.0);
    const Vec2 c0{r, r};
    const double envelope = std::hypot(delta, a); // slower candidate sets the horizon
    const double t_end = n_envelope_periods * kTwoPi / envelope;

    // Integer step count so halving dt lands the runs on identical recorded
    // times (the halving ratio must measure integrator error, not grid skew).
    IntegratorSpec spec = IntegratorSpec::resolve(1.0, t_end, steps_per_carrier);
    const std::size_t n_steps = static_cast<std::size_t>(std::ceil(t_end / spec.dt));
    spec.dt = t_end / static_cast<double>(n_steps);
    spec.record_stride = std::max<std::size_t>(1, n_steps / 8192);

    auto run = [&](double dt, std::size_t stride) {
        IntegratorSpec s = spec;
        s.dt = dt;
        s.record_stride = stride;
        return integrate_tdse(h_of_t, c0, s);
    };

    const AmplitudeTrace t1 = run(spec.dt, spec.record_stride);
    const AmplitudeTrace t2 = run(spec.dt / 2.0, spec.record_stride * 2);
    const AmplitudeTrace t4 = run(spec.dt / 4.0, spec.record_stride * 4);

    auto max_diff = [](const AmplitudeTrace& x, const AmplitudeTrace& y) {
        double worst = 0.0;
        const std::size_t n = std::min(x.size(), y.size());
        for (std::size_t i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(x.c1()[i] - y.c1()[i]));
            worst = std::max(worst, std::abs(x.c2()[i] - y.c2()[i]));
        }
        return worst;
    };
    out.step_halving_ratio = max_diff(t1, t2) / max_diff(t2, t4);

    double drift = 0.0;
    std::vector<double> upper(t4.size());
    for (std::size_t i = 0; i < t4.size(); ++i) {
        const Complex amp_p = (-t4.c1()[i] + t4.c2()[i]) * r; // <eta_P | psi>
        upper[i] = std::norm(amp_p);
        drift = std::max(drift,
                         std::abs(std::norm(t4.c1()[i]) + std::norm(t4.c2()[i]) - 1.0));
    }
    out.norm_drift = drift;

    const double dt_rec = t4.t()[1] - t4.t()[0];
    out.measured_split = dominant_frequency(std::move(upper), dt_rec) * omegaA;
    return out;
}

} // namespace tsslab
