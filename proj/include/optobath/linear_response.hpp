// linear_response.hpp: frequency response of the laser-cooled mechanical mode
//
// All functions are pure in (omega, params) and use the hbar = M = 1 units of
// SystemParams. Each complex response satisfies f(-omega) = conj(f(omega)).

#pragma once

#include "optobath/units_params.hpp"

#include <Eigen/Core>

namespace optobath {

struct ComplexResponse {
    double omega;
    Complex value;
};

// Bare susceptibility 1 / (omega_m^2 - omega^2 - i omega gamma_m).
// Throws PoleError when the inverse underflows (gamma_m = 0, omega = +-omega_m).
Complex chi_q0(double omega, const SystemParams& p);

// Optical self-energy from the cooling cavity,
//   hbar G_c^2 [1/((Delta_c + w) + i kappa_c/2) + 1/((Delta_c - w) - i kappa_c/2)].
Complex self_energy(double omega, const SystemParams& p);

// Dressed susceptibility 1 / (chi_q0^-1 + Sigma).
Complex chi_q(double omega, const SystemParams& p);

// Normalised Lorentzian centred at -Delta_c with full width kappa_c.
double lorentzian(double omega, const SystemParams& p);

// L[w] - L[-w], evaluated without cancellation.
double lorentzian_asymmetry(double omega, const SystemParams& p);

// Grid overloads.
Eigen::ArrayXcd chi_q(const Eigen::ArrayXd& omega, const SystemParams& p);
Eigen::ArrayXd lorentzian(const Eigen::ArrayXd& omega, const SystemParams& p);

// Location of the maximum of |chi_q|^2 on omega > 0 and its half-width at
// half maximum, used to place quadrature breakpoints.
struct Resonance {
    double omega;
    double half_width;
};
Resonance dressed_resonance(const SystemParams& p);

}  // namespace optobath
