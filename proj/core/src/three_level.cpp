#include "tsslab/three_level.hpp"

#include <algorithm>
#include <cmath>

namespace tsslab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void require_normalized(const Vec3& c, double tol) {
    double nsq = 0.0;
    for (const auto& z : c) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw validation_error("three-level state: non-finite amplitude");
        nsq += std::norm(z);
    }
    if (std::abs(nsq - 1.0) > tol)
        throw validation_error("three-level state: not normalized");
}

Mat3 build_rwa_hamiltonian(const ThreeLevelConfig& cfg) {
    const double dC = cfg.deltaC();
    Mat3 h;
    h(0, 0) = -dC / 2.0;
    h(0, 1) = cfg.D_C / 2.0;
    h(1, 0) = std::conj(cfg.D_C) / 2.0;
    h(1, 1) = +dC / 2.0;
    if (cfg.scenario == ProbeScenario::probe_e) {
        h(1, 2) = cfg.D_P / 2.0;
        h(2, 1) = std::conj(cfg.D_P) / 2.0;
        h(2, 2) = cfg.deltaPE() + dC / 2.0;
    } else {
        h(0, 2) = cfg.D_P / 2.0;
        h(2, 0) = std::conj(cfg.D_P) / 2.0;
        h(2, 2) = cfg.deltaPg() - dC / 2.0;
    }
    return h;
}

ThreeLevelPropagator::ThreeLevelPropagator(const ThreeLevelConfig& cfg) {
    require_normalized(cfg.c0);
    es_ = eig3_hermitian(build_rwa_hamiltonian(cfg));
    d0_ = adjoint(es_.vectors) * cfg.c0;
}

Vec3 ThreeLevelPropagator::at(double t) const {
    Vec3 d = d0_;
    for (std::size_t k = 0; k < 3; ++k) d[k] *= std::exp(-kImag * es_.values[k] * t);
    return es_.vectors * d;
}

double ThreeLevelPropagator::population_r(double t) const { return std::norm(at(t)[2]); }

double ThreeLevelPropagator::slow_gap() const {
    double scale = 0.0;
    for (double v : es_.values) scale = std::max(scale, std::abs(v));
    const double tiny = 1e-12 * std::max(scale, 1e-300);
    double gap = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const double g = std::abs(es_.values[i] - es_.values[j]);
            if (g > tiny && (gap == 0.0 || g < gap)) gap = g;
        }
    return gap;
}

Vec3 evolve3(const ThreeLevelConfig& cfg, double t) {
    return ThreeLevelPropagator(cfg).at(t);
}

StaticSystem coupling_block(double deltaC, Complex D_C) {
    const double mag = std::abs(D_C) / 2.0;
    const double phiD = (mag > 0.0) ? -std::arg(D_C) : 0.0;
    return StaticSystem(0.0, deltaC / 2.0, mag, phiD);
}

Vec3 eigenstate_init(double deltaC, Complex D_C, bool symm) {
    const StaticSystem block = coupling_block(deltaC, D_C);
    const Vec2 xi = symm ? block.xiP() : block.xiN();
    return Vec3{xi[0], xi[1], 0.0};
}

double predicted_center(ProbeScenario scenario, double deltaC, Complex D_C, bool symm) {
    const double lambda = 0.5 * std::hypot(deltaC, std::abs(D_C)) * (symm ? +1.0 : -1.0);
    return scenario == ProbeScenario::probe_e ? lambda - deltaC / 2.0 : lambda + deltaC / 2.0;
}

namespace {

struct LorentzianModel {
    double center, Q, amplitude;
    double operator()(double x) const {
        const double q2 = Q * Q;
        const double d = x - center;
        return amplitude * q2 / (q2 + d * d);
    }
};

double sse(std::span<const double> x, std::span<const double> y, const LorentzianModel& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - m(x[i]);
        acc += r * r;
    }
    return acc;
}

} // namespace

LorentzianFit fit_lorentzian(std::span<const double> x, std::span<const double> y,
                             int max_iterations) {
    if (x.size() != y.size() || x.size() < 5)
        throw validation_error("fit_lorentzian: need >= 5 samples of equal length");

    // Seed: argmax, half-max crossing width, peak height.
    std::size_t imax = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (y[i] > y[imax]) imax = i;
    const double peak = y[imax];
    if (!(peak > 0.0)) throw validation_error("fit_lorentzian: window has no positive peak");

    const double half = peak / 2.0;
    double x_lo = x.front(), x_hi = x.back();
    for (std::size_t i = imax; i-- > 0;) {
        if (y[i] < half) {
            const double f = (half - y[i]) / (y[i + 1] - y[i]);
            x_lo = x[i] + f * (x[i + 1] - x[i]);
            break;
        }
    }
    for (std::size_t i = imax + 1; i < y.size(); ++i) {
        if (y[i] < half) {
            const double f = (y[i - 1] - half) / (y[i - 1] - y[i]);
            x_hi = x[i - 1] + f * (x[i] - x[i - 1]);
            break;
        }
    }
    double q0 = 0.5 * (x_hi - x_lo);
    if (!(q0 > 0.0)) q0 = 0.1 * (x.back() - x.front());

    // Nelder-Mead on (center, Q, amplitude).
    using Point = std::array<double, 3>;
    auto eval = [&](const Point& p) {
        return sse(x, y, LorentzianModel{p[0], std::abs(p[1]), p[2]});
    };

    std::array<Point, 4> simplex{Point{x[imax], q0, peak},
                                 Point{x[imax] + 0.5 * q0, q0, peak},
                                 Point{x[imax], 1.5 * q0, peak},
                                 Point{x[imax], q0, 1.2 * peak}};
    std::array<double, 4> f{};
    for (std::size_t i = 0; i < 4; ++i) f[i] = eval(simplex[i]);

    const int budget = max_iterations;
    int iter = 0;
    for (; iter < budget; ++iter) {
        std::array<std::size_t, 4> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return f[a] < f[b]; });
        const std::size_t best = order[0], worst = order[3], second = order[2];

        double spread = 0.0;
        for (int d = 0; d < 3; ++d)
            spread = std::max(spread, std::abs(simplex[worst][d] - simplex[best][d]));
        const double scale = std::max({std::abs(simplex[best][0]), std::abs(simplex[best][1]),
                                       std::abs(simplex[best][2]), 1e-30});
        if (spread <= 1e-11 * scale || f[worst] - f[best] <= 1e-15 * (f[best] + 1e-300))
            break;

        Point centroid{0, 0, 0};
        for (std::size_t i = 0; i < 4; ++i)
            if (i != worst)
                for (int d = 0; d < 3; ++d) centroid[d] += simplex[i][d] / 3.0;

        auto affine = [&](double alpha) {
            Point p;
            for (int d = 0; d < 3; ++d)
                p[d] = centroid[d] + alpha * (simplex[worst][d] - centroid[d]);
            return p;
        };

        const Point refl = affine(-1.0);
        const double f_refl = eval(refl);
        if (f_refl < f[best]) {
            const Point exp_p = affine(-2.0);
            const double f_exp = eval(exp_p);
            if (f_exp < f_refl) {
                simplex[worst] = exp_p;
                f[worst] = f_exp;
            } else {
                simplex[worst] = refl;
                f[worst] = f_refl;
            }
        } else if (f_refl < f[second]) {
            simplex[worst] = refl;
            f[worst] = f_refl;
        } else {
            const Point contr = affine(0.5);
            const double f_contr = eval(contr);
            if (f_contr < f[worst]) {
                simplex[worst] = contr;
                f[worst] = f_contr;
            } else {
                for (std::size_t i = 0; i < 4; ++i) {
                    if (i == best) continue;
                    for (int d = 0; d < 3; ++d)
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    f[i] = eval(simplex[i]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (f[i] < f[best]) best = i;

    LorentzianFit fit;
    fit.center = simplex[best][0];
    fit.Q = std::abs(simplex[best][1]);
    fit.amplitude = simplex[best][2];
    fit.residual_rms = std::sqrt(f[best] / static_cast<double>(x.size()));
    if (iter >= budget) throw fit_error("fit_lorentzian: iteration budget exhausted", fit);
    return fit;
}

namespace {

ThreeLevelConfig with_probe_detuning(const ThreeLevelConfig& tmpl, double detuning) {
    ThreeLevelConfig cfg = tmpl;
    cfg.omega_P = (cfg.scenario == ProbeScenario::probe_e)
                      ? cfg.omega_re - detuning
                      : (cfg.omega_eg + cfg.omega_re) - detuning;
    return cfg;
}

} // namespace

double max_population_r(const ThreeLevelConfig& cfg, double horizon, std::size_t samples) {
    if (samples < 8) throw validation_error("max_population_r: need >= 8 samples");
    const ThreeLevelPropagator prop(cfg);
    double span = horizon;
    if (span <= 0.0) {
        const double slow = prop.slow_gap();
        if (slow == 0.0) return std::norm(cfg.c0[2]); // no dynamics at all
        span = 4.0 * kPi / slow;
    }
    if (!std::isfinite(span) || !(span > 0.0))
        throw validation_error("max_population_r: invalid horizon");

    const double dt = span / static_cast<double>(samples - 1);
    double best = 0.0;
    double t_best = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = dt * static_cast<double>(i);
        const double p = prop.population_r(t);
        if (p > best) {
            best = p;
            t_best = t;
        }
    }
    // Parabolic refinement of the sampled crest.
    const double pl = prop.population_r(t_best - dt);
    const double pr = prop.population_r(t_best + dt);
    const double denom = pl - 2.0 * best + pr;
    if (denom < 0.0) {
        const double shift = 0.5 * (pl - pr) / denom * dt;
        best = std::max(best, prop.population_r(t_best + shift));
    }
    return best;
}

ProbeSweepResult sweep_probe(const ThreeLevelConfig& tmpl, double det_lo, double det_hi,
                             std::size_t n_points, double horizon, std::size_t samples) {
    if (!(det_hi > det_lo)) throw validation_error("sweep_probe: empty detuning range");
    if (n_points < 8) throw validation_error("sweep_probe: need >= 8 sweep points");

    ProbeSweepResult out;
    out.scenario = tmpl.scenario;
    out.detunings.resize(n_points);
    out.max_population_r.resize(n_points);
    const double step = (det_hi - det_lo) / static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double det = det_lo + step * static_cast<double>(i);
        out.detunings[i] = det;
        out.max_population_r[i] = max_population_r(with_probe_detuning(tmpl, det), horizon, samples);
    }

    // Peak windows: local maxima above 10% of the global max, split at the
    // minimum between adjacent peaks.
    const auto& y = out.max_population_r;
    double global = 0.0;
    for (double v : y) global = std::max(global, v);
    std::vector<std::size_t> peaks;
    for (std::size_t i = 1; i + 1 < n_points; ++i)
        if (y[i] > 0.10 * global && y[i] >= y[i - 1] && y[i] > y[i + 1]) peaks.push_back(i);

    std::vector<std::size_t> bounds{0};
    for (std::size_t k = 1; k < peaks.size(); ++k) {
        std::size_t cut = peaks[k - 1];
        for (std::size_t i = peaks[k - 1]; i <= peaks[k]; ++i)
            if (y[i] < y[cut]) cut = i;
        bounds.push_back(cut);
    }
    bounds.push_back(n_points - 1);

    for (std::size_t k = 0; k < peaks.size(); ++k) {
        const std::size_t lo = bounds[k], hi = bounds[k + 1];
        out.fits.push_back(fit_lorentzian(std::span(out.detunings).subspan(lo, hi - lo + 1),
                                          std::span(y).subspan(lo, hi - lo + 1)));
    }
    return out;
}

std::vector<LinewidthRow> linewidth_study(std::span<const double> deltaC_values,
                                          std::span<const double> DC_values,
                                          std::span<const double> DP_values,
                                          ProbeScenario scenario, std::size_t sweep_points,
                                          std::size_t samples) {
    if (deltaC_values.size() > 10 || DC_values.size() > 10 || DP_values.size() > 3)
        throw validation_error("linewidth_study: grid larger than 10x10x3");

    std::vector<LinewidthRow> rows;
    for (double dC : deltaC_values) {
        for (double DC : DC_values) {
            for (double DP : DP_values) {
                for (bool symm : {true, false}) {
                    ThreeLevelConfig cfg;
                    cfg.omega_eg = 10.0 * DC; // arbitrary ladder; only detunings matter
                    cfg.omega_re = 10.0 * DC;
                    cfg.D_C = DC;
                    cfg.D_P = DP;
                    cfg.omega_C = cfg.omega_eg - dC;
                    cfg.scenario = scenario;
                    cfg.c0 = eigenstate_init(dC, cfg.D_C, symm);

                    const double center = predicted_center(scenario, dC, cfg.D_C, symm);
                    const double span = std::max(20.0 * DP, 0.5 * std::hypot(dC, DC));
                    const ProbeSweepResult sweep = sweep_probe(
                        cfg, center - span, center + span, sweep_points, 0.0, samples);

                    LinewidthRow row;
                    row.deltaC = dC;
                    row.D_C = DC;
                    row.D_P = DP;
                    row.scenario = scenario;
                    row.symm = symm;
                    if (!sweep.fits.empty()) {
                        // Keep the fit whose center is closest to the prediction.
                        std::size_t best = 0;
                        for (std::size_t i = 1; i < sweep.fits.size(); ++i)
                            if (std::abs(sweep.fits[i].center - center) <
                                std::abs(sweep.fits[best].center - center))
                                best = i;
                        row.fit = sweep.fits[best];
                    }
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

} // namespace tsslab
