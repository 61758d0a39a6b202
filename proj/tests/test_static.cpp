#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "tsslab/drive_system.hpp"
#include "tsslab/oracle.hpp"
#include "tsslab/presets.hpp"
#include "tsslab/static_system.hpp"

using namespace tsslab;
using namespace tsslab::testutil;

namespace {

constexpr double kPi = 3.14159265358979323846;

StateVector2 from_vec(const Vec2& v) { return {v[0], v[1]}; }

// Max of a smooth sampled function with one parabolic refinement of the crest.
template <typename F>
double sampled_max(F&& f, double t_lo, double t_hi, std::size_t n) {
    const double dt = (t_hi - t_lo) / static_cast<double>(n - 1);
    double best = f(t_lo), t_best = t_lo;
    for (std::size_t i = 1; i < n; ++i) {
        const double t = t_lo + dt * static_cast<double>(i);
        const double v = f(t);
        if (v > best) {
            best = v;
            t_best = t;
        }
    }
    const double pl = f(t_best - dt), pr = f(t_best + dt);
    const double denom = pl - 2.0 * best + pr;
    if (denom < 0.0) best = std::max(best, f(t_best + 0.5 * (pl - pr) / denom * dt));
    return best;
}

} // namespace

TEST_CASE("solve_matrix: t = 0 returns the initial state") {
    std::mt19937 gen(11);
    for (int i = 0; i < 20; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        const StateVector2 c = solve_matrix(sys, c0, 0.0);
        CHECK(std::abs(c.c1 - c0.c1) < 1e-14);
        CHECK(std::abs(c.c2 - c0.c2) < 1e-14);
    }
}

TEST_CASE("solve_matrix: eigenvector launch evolves by a single phase factor") {
    std::mt19937 gen(12);
    for (int i = 0; i < 20; ++i) {
        const StaticSystem sys = random_static(gen);
        const Vec2 xi = sys.xiP();
        for (double t : {0.3, 1.7, 9.2}) {
            const StateVector2 c = solve_matrix(sys, from_vec(xi), t);
            const Complex phase = std::exp(-kImag * (sys.omega0() + sys.OmegaP()) * t);
            CHECK(std::abs(c.c1 - phase * xi[0]) < 1e-13);
            CHECK(std::abs(c.c2 - phase * xi[1]) < 1e-13);
        }
    }
}

TEST_CASE("solve_matrix: matches the RK4 oracle to 1e-9 over 20 Rabi periods") {
    std::mt19937 gen(13);
    for (int i = 0; i < 3; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        CHECK(tih_deviation(sys, c0, 20.0) < 1e-9);
    }
}

TEST_CASE("solve_matrix: rejects non-normalized initial states") {
    const StaticSystem sys(0.0, 1.0, 0.5, 0.0);
    CHECK_THROWS_AS((void)solve_matrix(sys, StateVector2{0.9, 0.1}, 1.0), validation_error);
}

TEST_CASE("abcd: eigenvector launches zero out one column pair") {
    std::mt19937 gen(14);
    for (int i = 0; i < 50; ++i) {
        const StaticSystem sys = random_static(gen);
        const ABCDCoefficients kp = abcd_coefficients(sys, from_vec(sys.xiP()));
        CHECK(std::abs(kp.A) < 1e-13);
        CHECK(std::abs(kp.C) < 1e-13);
        CHECK(std::abs(kp.B - sys.xiP()[0]) < 1e-13);
        CHECK(std::abs(kp.D - sys.xiP()[1]) < 1e-13);

        const ABCDCoefficients kn = abcd_coefficients(sys, from_vec(sys.xiN()));
        CHECK(std::abs(kn.B) < 1e-13);
        CHECK(std::abs(kn.D) < 1e-13);
        CHECK(std::abs(kn.A - sys.xiN()[0]) < 1e-13);
        CHECK(std::abs(kn.C - sys.xiN()[1]) < 1e-13);
    }
}

TEST_CASE("abcd: diagonal proton system keeps the initial amplitudes") {
    const StaticSystem sys = preset_proton_static(3.0);
    const StateVector2 c0{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
    const ABCDCoefficients k = abcd_coefficients(sys, c0);
    CHECK(std::abs(k.A - c0.c1) < 1e-15);
    CHECK(std::abs(k.D - c0.c2) < 1e-15);
    CHECK(std::abs(k.B) < 1e-15);
    CHECK(std::abs(k.C) < 1e-15);
}

TEST_CASE("solve_abcd: equals solve_matrix pointwise to 1e-12") {
    std::mt19937 gen(15);
    for (int i = 0; i < 200; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        const ABCDCoefficients k = abcd_coefficients(sys, c0);
        std::uniform_real_distribution<double> time(-20.0, 20.0);
        for (int j = 0; j < 5; ++j) {
            const double t = time(gen);
            const StateVector2 a = solve_abcd(sys, k, t);
            const StateVector2 b = solve_matrix(sys, c0, t);
            CHECK(std::abs(a.c1 - b.c1) < 1e-12);
            CHECK(std::abs(a.c2 - b.c2) < 1e-12);
        }
    }
}

TEST_CASE("solve_abcd: t = 0 reproduces (A+B, C+D) = c0") {
    std::mt19937 gen(16);
    const StaticSystem sys = random_static(gen);
    const StateVector2 c0 = random_state(gen);
    const ABCDCoefficients k = abcd_coefficients(sys, c0);
    CHECK(std::abs(k.A + k.B - c0.c1) < 1e-13);
    CHECK(std::abs(k.C + k.D - c0.c2) < 1e-13);
}

TEST_CASE("solve_abcd: free-ammonia stationary state reproduces the quoted amplitudes") {
    const StaticSystem sys = preset_free_ammonia();
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector2 c0{-r, r}; // antisymmetric launch
    const ABCDCoefficients k = abcd_coefficients(sys, c0);
    CHECK(std::abs(k.A) < 1e-13);
    CHECK(std::abs(k.C) < 1e-13);

    const double omega_b = constants::omega_b_ammonia;
    for (double t : {1e-12, 7e-12, 4.2e-11}) {
        const StateVector2 c = solve_abcd(sys, k, t);
        const Complex phase = std::exp(-kImag * (sys.omega0() + omega_b) * t);
        CHECK(std::abs(c.c1 - (-r) * phase) < 1e-13);
        CHECK(std::abs(c.c2 - (+r) * phase) < 1e-13);
    }
}

TEST_CASE("probabilities: sum to one and oscillate at 2*OmegaP") {
    std::mt19937 gen(17);
    for (int i = 0; i < 100; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        const ABCDCoefficients k = abcd_coefficients(sys, c0);
        for (double t : {0.0, 0.9, 5.5}) {
            const Probabilities2 p = probabilities(k, sys.OmegaP(), t);
            CHECK(std::abs(p.p1 + p.p2 - 1.0) < 1e-12);
            // direct squaring oracle
            const StateVector2 c = solve_abcd(sys, k, t);
            CHECK(std::abs(p.p1 - std::norm(c.c1)) < 1e-12);
            CHECK(std::abs(p.p2 - std::norm(c.c2)) < 1e-12);
        }
    }
}

TEST_CASE("probabilities: stationary launches are time-independent") {
    std::mt19937 gen(18);
    const StaticSystem sys = random_static(gen);
    const ABCDCoefficients k = abcd_coefficients(sys, from_vec(sys.xiP()));
    const double p1_expected = std::norm(sys.xiP()[0]);
    for (double t : {0.0, 3.3, 11.7, 400.0}) {
        const Probabilities2 p = probabilities(k, sys.OmegaP(), t);
        CHECK(std::abs(p.p1 - p1_expected) < 1e-12);
    }
}

TEST_CASE("probabilities: zero diagonal gives full inversion p2 = sin^2(OmegaP t)") {
    const StaticSystem sys(0.0, 0.0, 1.4, 0.0);
    const ABCDCoefficients k = abcd_coefficients(sys, StateVector2{1.0, 0.0});
    for (double t : {0.1, 0.8, 2.9}) {
        const Probabilities2 p = probabilities(k, sys.OmegaP(), t);
        const double s = std::sin(sys.OmegaP() * t);
        CHECK(std::abs(p.p2 - s * s) < 1e-12);
    }
}

TEST_CASE("probabilities: real case matches the simplified cosine form") {
    // phiD in {0, pi} with real initial amplitudes makes (A,B,C,D) real and
    // P1 = A^2 + B^2 + 2AB cos(2 OmegaP t).
    std::mt19937 gen(19);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double phiD : {0.0, kPi}) {
        const StaticSystem sys(0.3, 0.9, 1.1, phiD);
        double a = dist(gen), b = dist(gen);
        const double n = std::hypot(a, b);
        const StateVector2 c0{a / n, b / n};
        const ABCDCoefficients k = abcd_coefficients(sys, c0);
        CHECK(std::abs(k.A.imag()) < 1e-14);
        for (double t : {0.4, 1.9}) {
            const Probabilities2 p = probabilities(k, sys.OmegaP(), t);
            const double A = k.A.real(), B = k.B.real();
            const double simplified = A * A + B * B + 2.0 * A * B * std::cos(2.0 * sys.OmegaP() * t);
            CHECK(std::abs(p.p1 - simplified) < 1e-13);
        }
    }
}

TEST_CASE("probabilities: dominant spectral peak sits at the generalized Rabi frequency") {
    std::mt19937 gen(20);
    for (int i = 0; i < 5; ++i) {
        const StaticSystem sys = random_static(gen);
        StateVector2 c0 = random_state(gen);
        // keep away from stationary launches
        if (std::abs(to_eigenbasis(sys, c0).c1) < 0.2 || std::abs(to_eigenbasis(sys, c0).c2) < 0.2)
            c0 = StateVector2{std::sqrt(0.3), std::sqrt(0.7)};
        const ABCDCoefficients k = abcd_coefficients(sys, c0);

        const double period = 2.0 * kPi / sys.OmegaGR();
        const std::size_t n = 512;
        const double T = 8.0 * period; // OmegaGR lands exactly on bin 8
        std::vector<Complex> samples(n);
        for (std::size_t j = 0; j < n; ++j)
            samples[j] = probabilities(k, sys.OmegaP(), T * static_cast<double>(j) / n).p1;

        const DenseSpectrum spec = dft_spectrum(samples, T / n);
        const double bin = 2.0 * kPi / T;
        double best_mag = 0.0, best_freq = 0.0;
        for (std::size_t j = 0; j < spec.frequency.size(); ++j) {
            if (spec.frequency[j] < 0.5 * bin) continue; // skip DC and negative bins
            if (spec.magnitude[j] > best_mag) {
                best_mag = spec.magnitude[j];
                best_freq = spec.frequency[j];
            }
        }
        CHECK(std::abs(best_freq - sys.OmegaGR()) <= bin + 1e-9);
    }
}

TEST_CASE("definite energies of the concrete presets") {
    const StaticSystem proton = preset_proton_static(3.0);
    const DefiniteEnergies ep = definite_energies(proton);
    const double omega_pr = constants::gamma_p * 3.0;
    CHECK(ep.EP == doctest::Approx(+omega_pr).epsilon(1e-14));
    CHECK(ep.EN == doctest::Approx(-omega_pr).epsilon(1e-14));

    const StaticSystem free_nh3 = preset_free_ammonia();
    const DefiniteEnergies ea = definite_energies(free_nh3);
    CHECK(ea.EP == doctest::Approx(3e11 + constants::omega_b_ammonia).epsilon(1e-14));
    CHECK(ea.EN == doctest::Approx(3e11 - constants::omega_b_ammonia).epsilon(1e-14));

    const StaticSystem dc_nh3 = preset_ammonia_staticE();
    const double omega_E = ammonia_omega_E(2.36e-2);
    const double gap_half = std::hypot(omega_E, constants::omega_b_ammonia);
    CHECK(definite_energies(dc_nh3).EP == doctest::Approx(3e11 + gap_half).epsilon(1e-14));
    CHECK(definite_energies(dc_nh3).EP - definite_energies(dc_nh3).EN ==
          doctest::Approx(dc_nh3.OmegaGR()).epsilon(1e-14));
}

TEST_CASE("to_eigenbasis: eigenvectors map to basis states; round trip is exact") {
    std::mt19937 gen(21);
    for (int i = 0; i < 50; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 dP = to_eigenbasis(sys, from_vec(sys.xiP()));
        CHECK(std::abs(dP.c1 - 1.0) < 1e-13);
        CHECK(std::abs(dP.c2) < 1e-13);
        const StateVector2 dN = to_eigenbasis(sys, from_vec(sys.xiN()));
        CHECK(std::abs(dN.c1) < 1e-13);
        CHECK(std::abs(dN.c2 - 1.0) < 1e-13);

        const StateVector2 c = random_state(gen);
        const StateVector2 round = from_eigenbasis(sys, to_eigenbasis(sys, c));
        CHECK(std::abs(round.c1 - c.c1) < 1e-13);
        CHECK(std::abs(round.c2 - c.c2) < 1e-13);
    }
}

TEST_CASE("to_eigenbasis: |D| components are invariant under evolution") {
    std::mt19937 gen(22);
    const StaticSystem sys = random_static(gen);
    const StateVector2 c0 = random_state(gen);
    const StateVector2 d0 = to_eigenbasis(sys, c0);
    for (double t : {0.7, 4.1, 33.0}) {
        const StateVector2 dt = to_eigenbasis(sys, solve_matrix(sys, c0, t));
        CHECK(std::abs(std::abs(dt.c1) - std::abs(d0.c1)) < 1e-12);
        CHECK(std::abs(std::abs(dt.c2) - std::abs(d0.c2)) < 1e-12);
    }
}

TEST_CASE("average_energy: all four routes agree and stay inside [EN, EP]") {
    std::mt19937 gen(23);
    for (int i = 0; i < 300; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        const double scale = std::abs(sys.omega0()) + sys.OmegaP();

        const double w = average_energy(sys, c0, AverageEnergyRoute::weighted);
        const double b = average_energy(sys, c0, AverageEnergyRoute::bracket);
        const double dc = average_energy(sys, c0, AverageEnergyRoute::density_canonical);
        const double de = average_energy(sys, c0, AverageEnergyRoute::density_eigen);
        CHECK(std::abs(w - b) < 1e-12 * std::max(1.0, scale));
        CHECK(std::abs(w - dc) < 1e-12 * std::max(1.0, scale));
        CHECK(std::abs(w - de) < 1e-12 * std::max(1.0, scale));

        const DefiniteEnergies e = definite_energies(sys);
        CHECK(w >= e.EN - 1e-12 * std::max(1.0, scale));
        CHECK(w <= e.EP + 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("average_energy: eigenvector launches give the definite energies") {
    std::mt19937 gen(24);
    const StaticSystem sys = random_static(gen);
    const DefiniteEnergies e = definite_energies(sys);
    for (auto route : {AverageEnergyRoute::weighted, AverageEnergyRoute::bracket,
                       AverageEnergyRoute::density_canonical, AverageEnergyRoute::density_eigen}) {
        CHECK(average_energy(sys, from_vec(sys.xiP()), route) == doctest::Approx(e.EP).epsilon(1e-12));
        CHECK(average_energy(sys, from_vec(sys.xiN()), route) == doctest::Approx(e.EN).epsilon(1e-12));
    }
}

TEST_CASE("average_energy: basis-state launch gives omega0 - omega11 for any phiD") {
    for (double phiD : {0.0, 1.1, kPi}) {
        const StaticSystem sys(0.7, 0.4, 1.3, phiD);
        const double expected = sys.omega0() - sys.omega11();
        for (auto route : {AverageEnergyRoute::weighted, AverageEnergyRoute::density_canonical})
            CHECK(average_energy(sys, StateVector2{1.0, 0.0}, route) ==
                  doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("average_energy: constant along the evolution") {
    std::mt19937 gen(25);
    const StaticSystem sys = random_static(gen);
    const StateVector2 c0 = random_state(gen);
    const double e0 = average_energy(sys, c0, AverageEnergyRoute::bracket);
    for (double t : {0.9, 8.2, 71.0}) {
        const StateVector2 ct = solve_matrix(sys, c0, t);
        CHECK(average_energy(sys, ct, AverageEnergyRoute::bracket) ==
              doctest::Approx(e0).epsilon(1e-11));
    }
}

TEST_CASE("average_energy: unknown route tag rejected") {
    const StaticSystem sys(0.0, 1.0, 0.5, 0.0);
    CHECK_THROWS_AS((void)average_energy(sys, StateVector2{1.0, 0.0},
                                         static_cast<AverageEnergyRoute>(99)),
                    validation_error);
}

TEST_CASE("modulation_depth: Lorentzian values and the numeric maximum") {
    CHECK(modulation_depth(StaticSystem(0.0, 0.0, 1.0, 0.0)) == doctest::Approx(1.0));
    CHECK(modulation_depth(StaticSystem(0.0, 1.0, 1.0, 0.0)) == doctest::Approx(0.5));
    CHECK(modulation_depth(StaticSystem(0.0, 3.0, 1.0, 0.0)) == doctest::Approx(0.1));
    CHECK(modulation_depth(StaticSystem(0.0, 0.0, 0.0, 0.0)) == 0.0);

    const StaticSystem sys(0.4, 0.8, 1.7, 2.1);
    const ABCDCoefficients k = abcd_coefficients(sys, StateVector2{1.0, 0.0});
    const double period = kPi / sys.OmegaP();
    const double numeric = sampled_max(
        [&](double t) { return probabilities(k, sys.OmegaP(), t).p2; }, 0.0, period, 2001);
    CHECK(std::abs(numeric - modulation_depth(sys)) < 1e-9);
}

TEST_CASE("norm conservation over 1e4 Rabi periods, both routes") {
    std::mt19937 gen(26);
    for (int i = 0; i < 10; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        const ABCDCoefficients k = abcd_coefficients(sys, c0);
        const double t = 1e4 * 2.0 * kPi / sys.OmegaGR();
        CHECK(std::abs(solve_matrix(sys, c0, t).norm_sq() - 1.0) <= 1e-12);
        CHECK(std::abs(solve_abcd(sys, k, t).norm_sq() - 1.0) <= 1e-12);
    }
}

TEST_CASE("stationary detection: eigenvector launches only") {
    std::mt19937 gen(27);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
        const StaticSystem sys = random_static(gen);
        const StateVector2 c0 = random_state(gen);
        const ABCDCoefficients k = abcd_coefficients(sys, c0);
        const bool stationary_p = std::abs(k.A) < 1e-13 && std::abs(k.C) < 1e-13;
        const bool stationary_n = std::abs(k.B) < 1e-13 && std::abs(k.D) < 1e-13;
        CHECK_FALSE(stationary_p);
        CHECK_FALSE(stationary_n);
    }
    for (int i = 0; i < 100; ++i) {
        const StaticSystem sys = random_static(gen);
        const Complex global = std::polar(1.0, phase(gen));
        const Vec2 xi = sys.xiP();
        const ABCDCoefficients k =
            abcd_coefficients(sys, StateVector2{global * xi[0], global * xi[1]});
        CHECK(std::abs(k.A) < 1e-13);
        CHECK(std::abs(k.C) < 1e-13);
    }
}

TEST_CASE("classify: Symm / Asym / complex phase") {
    CHECK(classify(Vec2{0.6, 0.8}) == VectorSymmetry::symm);
    CHECK(classify(Vec2{0.0, 1.0}) == VectorSymmetry::symm);
    CHECK(classify(Vec2{0.6, -0.8}) == VectorSymmetry::asym);
    CHECK(classify(Vec2{Complex{0.6, 0.0}, Complex{0.0, 0.8}}) == VectorSymmetry::complex_phase);

    const StaticSystem sys(0.0, 0.4, 1.0, 0.0); // phiD = 0
    CHECK(classify(sys.xiP()) == VectorSymmetry::symm);
    CHECK(classify(sys.xiN()) == VectorSymmetry::asym);
}

TEST_CASE("pure density: Hermitian, unit trace, idempotent") {
    std::mt19937 gen(28);
    for (int i = 0; i < 20; ++i) {
        const StateVector2 c = random_state(gen);
        const Mat2 rho = pure_density(c);
        CHECK(std::abs(rho(0, 1) - std::conj(rho(1, 0))) < 1e-14);
        CHECK(std::abs((rho(0, 0) + rho(1, 1)).real() - 1.0) < 1e-12);
        const Mat2 rho2 = rho * rho;
        double worst = 0.0;
        for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(rho2.m[j] - rho.m[j]));
        CHECK(worst < 1e-10);
    }
}
