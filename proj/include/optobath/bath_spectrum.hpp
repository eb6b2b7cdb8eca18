// bath_spectrum.hpp: effective spectral density and temperature of the
// laser-cooled mechanical bath, with the closed-form low-frequency limits.

#pragma once

#include "optobath/quadrature.hpp"
#include "optobath/units_params.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace optobath {

// Ohmic density gamma_m * omega * exp(-omega / cutoff).
double ohmic_j(double omega, const SystemParams& p);

// J_eff = |chi_q|^2 { J + pi hbar G_c^2 (L[w] - L[-w]) }.
double j_eff(double omega, const SystemParams& p);

// hbar beta_eff from the detailed-balance ratio
//   exp(w beta_eff) = (J (n+1) + pi hbar G_c^2 L[w]) / (J n + pi hbar G_c^2 L[-w]).
// Negative values (gain regime) are returned as-is. Without cooling (g_c = 0)
// the result is beta itself, also where n underflows.
double beta_eff(double omega, const SystemParams& p);

inline bool is_thermal(double beta_eff_value) { return beta_eff_value > 0.0; }

// Laser-cooling-dominated limit: exp(w beta_opt) = L[w] / L[-w]. Defined for
// any omega != 0 and even in omega.
double beta_opt(double omega, const SystemParams& p);

struct OmegaExpansion {
    double constant;
    double omega2;
};
// hbar beta_opt = constant + omega2 * w^2 + O(w^4).
OmegaExpansion beta_opt_expansion(const SystemParams& p);

// Low-frequency Ohmic slope of J_eff at gamma_m = 0. Throws DivergenceError
// at the instability threshold.
double eta_opt(const SystemParams& p);

// Critical cooling coupling; requires Delta_c < 0 (RegimeError otherwise).
double g_c_max(const SystemParams& p);

// omega -> 0 limit of beta_eff with the thermal environment included.
double beta_eff_low(const SystemParams& p);

struct GammaExpansion {
    double zeroth;
    double first;  // coefficient of gamma_m
};
GammaExpansion beta_eff_low_expansion(const SystemParams& p);

// omega -> 0 slope of J_eff including gamma_m (exact in gamma_m).
double eta_eff(const SystemParams& p);

// gamma_eff(t) = Theta(t) (2/pi) int_0^inf J_eff/w cos(w t) dw.
// Throws QuadratureError when the tolerance is not reached.
quad::Result<double> damping_kernel(double t, const SystemParams& p,
                                    const quad::Tolerance& tol = {});

// Truncation point of the semi-infinite spectral integrals and the
// breakpoints (resonance, Lorentzian centre, decades) used to split them.
double spectral_upper_limit(const SystemParams& p);
std::vector<double> spectral_breakpoints(const SystemParams& p);

// Frequency grids. Throw ConfigError for count < 2, min >= max, or a
// non-positive lower bound on a log grid.
Eigen::ArrayXd log_grid(double min, double max, int count);
Eigen::ArrayXd linear_grid(double min, double max, int count);
// Logarithmic, 400 points over [1e-4, 4] omega_m.
Eigen::ArrayXd default_grid(const SystemParams& p);

enum PointFlag : std::uint8_t {
    flag_none = 0,
    flag_pole_skipped = 1,
    flag_non_thermal = 2,
};

struct BathSpectrum {
    Eigen::ArrayXd grid;
    Eigen::ArrayXd j_eff;
    Eigen::ArrayXd beta_eff;
    std::vector<std::uint8_t> flags;

    Eigen::ArrayXd t_eff() const { return beta_eff.inverse(); }
};

// Evaluates J_eff and beta_eff on a strictly ascending positive grid.
// Pole hits are flagged and stored as NaN; the rest of the grid is kept.
BathSpectrum compute_bath_spectrum(const Eigen::ArrayXd& grid, const SystemParams& p,
                                   unsigned threads = 1);

}  // namespace optobath
