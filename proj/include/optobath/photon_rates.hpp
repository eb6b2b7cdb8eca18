// photon_rates.hpp: noise spectrum, golden-rule photon rates and the
// grand-canonical occupation they imply.
//
// Omega is the system-mode frequency in the frame of the beam-splitter drive,
// Omega = -Delta_a = omega_a - nu_b; hbar nu_b plays the chemical potential.

#pragma once

#include "optobath/units_params.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace optobath {

// Omega from lab-frame mode and drive frequencies.
inline double rotating_frame_frequency(double omega_a, double nu_b) { return omega_a - nu_b; }

// Quantum noise spectrum of q from the (J_eff, beta_eff) representation:
//   S[w > 0] = 2 J_eff(w) (n_eff + 1),  S[w < 0] = 2 J_eff(|w|) n_eff.
double s_qq(double omega, const SystemParams& p);

struct GammaRates {
    double plus;   // emission, (g_a^2 / q_zpf^2) S[-Omega]
    double minus;  // absorption, (g_a^2 / q_zpf^2) S[Omega]
};
GammaRates gamma_rates(double Omega, const SystemParams& p);

struct TransitionRates {
    double up;    // R_{n -> n+1} = (n + 1) Gamma_+
    double down;  // R_{n -> n-1} = n Gamma_-
};
TransitionRates fgr_rates(int n, double Omega, const SystemParams& p);

enum class GainPolicy {
    Reject,  // gain-regime occupation reported as NaN
    Raw,     // return the (negative) Bose expression
};

struct Occupation {
    double n_bar;
    bool non_equilibrium;  // beta_eff <= 0: no thermal fixed point
};

// n = 1/(exp(Omega beta_eff) - 1).
Occupation occupation(double Omega, const SystemParams& p, GainPolicy policy = GainPolicy::Reject);

// Fixed point of (n+1)/n = (Gamma_- + kappa_a)/Gamma_+. Throws RegimeError
// when Gamma_- + kappa_a <= Gamma_+.
double occupation_with_loss(double Omega, const SystemParams& p);

struct RateTable {
    Eigen::ArrayXd omega;
    Eigen::ArrayXd gamma_plus;
    Eigen::ArrayXd gamma_minus;
    Eigen::ArrayXd n_bar;
    Eigen::ArrayXd n_bar_lossy;
    std::vector<std::uint8_t> flags;  // PointFlag bits
};

RateTable compute_rate_table(const Eigen::ArrayXd& grid, const SystemParams& p,
                             unsigned threads = 1, GainPolicy policy = GainPolicy::Reject);

}  // namespace optobath
