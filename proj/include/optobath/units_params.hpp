// units_params.hpp: dimensionless parameter set and steady-state drive helpers
//
// Unit system: hbar = k_B = M = 1 and every frequency is measured in units of
// the mechanical frequency. With these conventions q_zpf^2 = 1/(2 omega_m) and
// the pump-enhanced couplings g_a, g_c are the only optomechanical inputs.

#pragma once

#include <complex>
#include <numbers>

namespace optobath {

using Complex = std::complex<double>;

struct SystemParams {
    double omega_m{1.0};                          // mechanical frequency
    double gamma_m{1e-6};                         // mechanical damping
    double kappa_b{1.0};                          // beam-splitter cavity linewidth
    double kappa_c{2.0 / std::numbers::sqrt3};    // cooling cavity linewidth
    double kappa_a{0.0};                          // system cavity loss
    double delta_a{-2.5};                         // nu - omega, per mode
    double delta_b{0.0};
    double delta_c{-1.0};
    double g_a{0.45};                             // pump-enhanced system-bath coupling
    double g_c{0.45};                             // pump-enhanced cooling coupling
    double beta{1e-4};                            // hbar * beta of the mechanical environment
    double cutoff{1e3};                           // Ohmic exponential cutoff

    // Throws ConfigError when an invariant is violated.
    void validate() const;

    // hbar G_c^2 = 2 g_c^2 omega_m M.
    double cooling_strength() const noexcept { return 2.0 * g_c * g_c * omega_m; }
    double zpf_squared() const noexcept { return 0.5 / omega_m; }
    // Delta_c^2 + kappa_c^2 / 4
    double cooling_detuning_norm() const noexcept {
        return delta_c * delta_c + 0.25 * kappa_c * kappa_c;
    }
};

// Classical drive of one cavity: folded raw coupling, input amplitude
// (square-root photon flux, real after phase absorption) and detuning.
struct DriveSpec {
    double coupling{0.0};
    double input_amplitude{0.0};
    double detuning{0.0};
};

struct SteadyAmplitude {
    Complex value;
    double magnitude;
};

// s = sqrt(kappa) s_in / (i Delta - kappa/2)
SteadyAmplitude steady_state_amplitude(const DriveSpec& drive, double kappa);

// Rest-position shift q_0 = -G_c0 |c_s|^2 / omega_m^2 that cancels the static
// radiation-pressure force.
double equilibrium_displacement(double coupling_c0, Complex c_s, double omega_m);

// Red-detuned root of 4 Delta_c^2 = 3 kappa_c^2.
double optimal_detuning(double kappa_c);

// Bose occupation 1/(exp(beta omega) - 1) of the mechanical environment.
double thermal_occupation(double omega, double beta);

namespace presets {
// Laser-cooled resonator: Delta_c = -omega_m = -sqrt(3/4) kappa_c,
// g_a = g_c = 0.45, gamma_m = 1e-6, hbar beta = 1e-4.
SystemParams fig1_cooled();
// Same resonator with the cooling drive off (g_c = 0).
SystemParams fig1_bare();
// Laser-cooling-dominated family at -Delta_c = omega_m = sqrt(3) kappa_c / 2,
// g_c given as a fraction of g_c,max. The g_c = 0 member keeps the thermal
// environment; the others set gamma_m = 0.
SystemParams fig3(double gc_over_gc_max);
inline constexpr double fig3_ratios[] = {0.0, 0.24, 0.5, 0.75, 0.9};
}  // namespace presets

}  // namespace optobath
