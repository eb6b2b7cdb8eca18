#include "optobath/msi_design.hpp"

#include "optobath/errors.hpp"

#include <cmath>

namespace optobath {

void MsiGeometry::validate() const {
    if (!(r_m >= 0.0 && r_m < 1.0)) throw ConfigError("MSI: r_m must lie in [0, 1)");
    if (!(omega_0 > 0.0)) throw ConfigError("MSI: omega_0 must be > 0");
    if (!(d > 0.0 && L > 0.0 && l > 0.0)) throw ConfigError("MSI: lengths must be > 0");
}

double msi_coupling(const MsiGeometry& geo) {
    geo.validate();
    return geo.r_m * geo.omega_0 / geo.effective_length();
}

namespace {

double zero_point_length(double mass, double omega_m) {
    if (!(mass > 0.0) || !(omega_m > 0.0))
        throw ConfigError("hardware: mass and omega_m must be > 0");
    return std::sqrt(hbar_si / (2.0 * mass * omega_m));
}

}  // namespace

double enhanced_coupling_from_hardware(const MsiGeometry& geo, double b_s, double mass,
                                       double omega_m) {
    return msi_coupling(geo) * std::abs(b_s) * zero_point_length(mass, omega_m) / omega_m;
}

double drive_amplitude_for_coupling(const MsiGeometry& geo, double g_a, double mass,
                                    double omega_m) {
    const double per_unit = msi_coupling(geo) * zero_point_length(mass, omega_m) / omega_m;
    if (per_unit == 0.0) throw ConfigError("hardware: coupling vanishes for r_m = 0");
    return g_a / per_unit;
}

SystemParams apply_hardware(const SystemParams& p, const HardwareSpec& hw) {
    SystemParams out = p;
    out.g_a = enhanced_coupling_from_hardware(hw.geometry, hw.b_s, hw.mass, hw.omega_m);
    return out;
}

}  // namespace optobath
