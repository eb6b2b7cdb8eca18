#include "optobath/units_params.hpp"

#include "optobath/errors.hpp"

#include <cmath>
#include <string>

namespace optobath {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
}

}  // namespace

void SystemParams::validate() const {
    const double all[] = {omega_m, gamma_m, kappa_b, kappa_c, kappa_a, delta_a,
                          delta_b, delta_c, g_a, g_c, beta, cutoff};
    for (double v : all) require(std::isfinite(v), "parameters must be finite");
    require(omega_m > 0.0, "omega_m must be > 0");
    require(kappa_c > 0.0, "kappa_c must be > 0");
    require(kappa_b > 0.0, "kappa_b must be > 0");
    require(cutoff > 0.0, "cutoff must be > 0");
    require(beta > 0.0, "beta must be > 0");
    require(gamma_m >= 0.0, "gamma_m must be >= 0");
    require(kappa_a >= 0.0, "kappa_a must be >= 0");
    require(g_a >= 0.0, "g_a must be >= 0");
    require(g_c >= 0.0, "g_c must be >= 0");
}

SteadyAmplitude steady_state_amplitude(const DriveSpec& drive, double kappa) {
    if (!(kappa > 0.0)) throw ConfigError("steady_state_amplitude: kappa must be > 0");
    const Complex denom{-0.5 * kappa, drive.detuning};
    const Complex s = std::sqrt(kappa) * drive.input_amplitude / denom;
    return {s, std::abs(s)};
}

double equilibrium_displacement(double coupling_c0, Complex c_s, double omega_m) {
    return -coupling_c0 * std::norm(c_s) / (omega_m * omega_m);
}

double optimal_detuning(double kappa_c) {
    if (!(kappa_c > 0.0)) throw ConfigError("optimal_detuning: kappa_c must be > 0");
    return -0.5 * std::numbers::sqrt3 * kappa_c;
}

double thermal_occupation(double omega, double beta) {
    return 1.0 / std::expm1(beta * omega);
}

namespace presets {

SystemParams fig1_cooled() {
    SystemParams p;
    p.omega_m = 1.0;
    p.delta_c = -1.0;
    p.kappa_c = 2.0 / std::numbers::sqrt3;
    p.beta = 1e-4;
    p.gamma_m = 1e-6;
    p.g_a = 0.45;
    p.g_c = 0.45;
    return p;
}

SystemParams fig1_bare() {
    SystemParams p = fig1_cooled();
    p.g_c = 0.0;
    return p;
}

SystemParams fig3(double gc_over_gc_max) {
    SystemParams p = fig1_cooled();
    // g_c,max = kappa_c / 2 at this detuning
    p.g_c = gc_over_gc_max * 0.5 * p.kappa_c;
    if (gc_over_gc_max > 0.0) p.gamma_m = 0.0;
    return p;
}

}  // namespace presets

}  // namespace optobath
