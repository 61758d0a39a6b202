#include <benchmark/benchmark.h>

#include <random>

#include "tsslab/drive_system.hpp"
#include "tsslab/oracle.hpp"
#include "tsslab/presets.hpp"
#include "tsslab/three_level.hpp"

using namespace tsslab;

namespace {

Mat3 fixed_hermitian3() {
    Mat3 h;
    h(0, 0) = 0.7;
    h(1, 1) = -0.4;
    h(2, 2) = 1.9;
    h(0, 1) = Complex{0.3, 0.2};
    h(1, 0) = std::conj(h(0, 1));
    h(0, 2) = Complex{-0.1, 0.5};
    h(2, 0) = std::conj(h(0, 2));
    h(1, 2) = Complex{0.6, -0.3};
    h(2, 1) = std::conj(h(1, 2));
    return h;
}

void BM_eig2(benchmark::State& state) {
    Mat2 h;
    h(0, 0) = -0.9;
    h(1, 1) = 0.9;
    h(0, 1) = Complex{0.4, -0.7};
    h(1, 0) = std::conj(h(0, 1));
    for (auto _ : state) benchmark::DoNotOptimize(eig2_hermitian(h));
}
BENCHMARK(BM_eig2);

void BM_eig3(benchmark::State& state) {
    const Mat3 h = fixed_hermitian3();
    for (auto _ : state) benchmark::DoNotOptimize(eig3_hermitian(h));
}
BENCHMARK(BM_eig3);

void BM_propagator3(benchmark::State& state) {
    const Mat3 h = fixed_hermitian3();
    double t = 0.0;
    for (auto _ : state) {
        t += 0.01;
        benchmark::DoNotOptimize(propagator(h, t));
    }
}
BENCHMARK(BM_propagator3);

void BM_solve_driven_point(benchmark::State& state) {
    const DriveSystem sys = preset_cesium(1.0, 0.0);
    const StateVector2 c0{1.0, 0.0};
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-7;
        benchmark::DoNotOptimize(solve_driven(sys, c0, t));
    }
}
BENCHMARK(BM_solve_driven_point);

void BM_rk4_trace(benchmark::State& state) {
    const DriveSystem sys(0.0, 1.0, Complex{1e-2, 0.0}, 1.0);
    auto h_of_t = [&](double t) {
        Mat2 h;
        const Complex coupling = sys.OmegaD() * std::cos(sys.omegaC() * t);
        h(0, 0) = -0.5;
        h(0, 1) = coupling;
        h(1, 0) = std::conj(coupling);
        h(1, 1) = +0.5;
        return h;
    };
    const IntegratorSpec spec = IntegratorSpec::resolve(1.0, 100.0, 256, 1024);
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_tdse(h_of_t, Vec2{1.0, 0.0}, spec));
}
BENCHMARK(BM_rk4_trace);

void BM_probe_sweep_point(benchmark::State& state) {
    ThreeLevelConfig cfg;
    cfg.omega_eg = 10.0;
    cfg.omega_re = 12.0;
    cfg.D_C = 1.0;
    cfg.D_P = 0.05;
    cfg.omega_C = cfg.omega_eg;
    cfg.omega_P = cfg.omega_re - 0.5;
    cfg.scenario = ProbeScenario::probe_e;
    cfg.c0 = eigenstate_init(0.0, cfg.D_C, true);
    for (auto _ : state) benchmark::DoNotOptimize(max_population_r(cfg));
}
BENCHMARK(BM_probe_sweep_point);

} // namespace

BENCHMARK_MAIN();
