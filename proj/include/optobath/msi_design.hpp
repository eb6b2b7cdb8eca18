// msi_design.hpp: Michelson-Sagnac interferometer coupling helpers.
//
// This is the one place that works in SI units; everything it returns is
// converted into the dimensionless SystemParams convention.

#pragma once

#include "optobath/units_params.hpp"

namespace optobath {

inline constexpr double hbar_si = 1.054571817e-34;  // J s

// Dark-fringe geometry. omega_0 is an absolute angular frequency (rad/s) and
// lengths are in metres. r_m is the magnitude of the membrane reflectivity.
struct MsiGeometry {
    double r_m{0.0};
    double omega_0{0.0};
    double d{0.0};
    double L{0.0};
    double l{0.0};

    double effective_length() const noexcept { return d + L + l; }
    void validate() const;  // ConfigError on violation
};

// G_a0 = r_m omega_0 / (d + L + l), frequency per metre.
double msi_coupling(const MsiGeometry& geo);

// g_a = G_a0 |b_s| q_zpf / omega_m with q_zpf = sqrt(hbar / (2 M omega_m)).
double enhanced_coupling_from_hardware(const MsiGeometry& geo, double b_s, double mass,
                                       double omega_m);

// Inverse of enhanced_coupling_from_hardware for |b_s|.
double drive_amplitude_for_coupling(const MsiGeometry& geo, double g_a, double mass,
                                    double omega_m);

// Hardware block of a configuration document.
struct HardwareSpec {
    MsiGeometry geometry;
    double b_s{0.0};       // intracavity amplitude magnitude (sqrt photons)
    double mass{0.0};      // kg
    double omega_m{0.0};   // rad/s
};

// Copies p and replaces g_a by the hardware-derived value.
SystemParams apply_hardware(const SystemParams& p, const HardwareSpec& hw);

}  // namespace optobath
