// correlation_oracle.hpp: independent checks of the spectral shortcuts:
// position autocorrelation by direct quadrature, steady-state covariance by
// the Lyapunov equation, and Euler-Maruyama trajectories.
//
// The Lyapunov and trajectory routes model white vacuum noise only and are
// therefore restricted to gamma_m = 0.

#pragma once

#include "optobath/quadrature.hpp"
#include "optobath/stability.hpp"
#include "optobath/units_params.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cstdint>
#include <string_view>
#include <vector>

namespace optobath {

struct CorrelationValue {
    Complex value;
    double abs_error;
    double tail_bound;
};

// Brownian-force part: int_0^inf (J |chi_q|^2 / pi)[coth(beta w/2) cos wt - i sin wt] dw.
CorrelationValue c_qq_thermal(double t, const SystemParams& p, const quad::Tolerance& tol = {});
// Cooling-cavity part: int_0^inf hbar G_c^2 |chi_q|^2 (e^{-iwt} L[w] + e^{iwt} L[-w]) dw.
CorrelationValue c_qq_optical(double t, const SystemParams& p, const quad::Tolerance& tol = {});
CorrelationValue c_qq_total(double t, const SystemParams& p, const quad::Tolerance& tol = {});
// The same correlation written through (J_eff, beta_eff):
//   (1/pi) int_0^inf J_eff [coth(w beta_eff/2) cos wt - i sin wt] dw.
CorrelationValue c_qq_representation(double t, const SystemParams& p,
                                     const quad::Tolerance& tol = {});

enum class Contribution { thermal, optical, total };
std::string_view to_string(Contribution c);

struct CorrelationSeries {
    std::vector<double> times;
    std::vector<Complex> values;
    Contribution tag;
};

CorrelationSeries correlation_series(const std::vector<double>& times, const SystemParams& p,
                                     Contribution tag, const quad::Tolerance& tol = {},
                                     unsigned threads = 1);

// C_qq(k dt), k = 0..count-1, from a fixed composite Gauss-Legendre rule on
// [0, upper] with panels no wider than max_panel. Intended for long uniform
// series (spectrum checks) where per-point adaptive quadrature is too slow.
std::vector<Complex> sample_correlation_uniform(const SystemParams& p, double dt, int count,
                                                double upper, double max_panel = 0.02,
                                                int order = 8);

// 2 Re int_0^T e^{i w t} C(t) dt by the trapezoid rule; uses C(-t) = conj C(t).
double spectrum_from_series(const std::vector<Complex>& series, double dt, double omega);

// <q^2> = (1/2 pi) int S_qq dw through the (J_eff, beta_eff) route.
quad::Result<double> spectral_position_variance(const SystemParams& p,
                                                const quad::Tolerance& tol = {});

using CovarianceMatrix = Eigen::Matrix4d;

// Solves A V + V A^T + D = 0 by Kronecker vectorisation.
template <typename DerivedA, typename DerivedD>
auto solve_lyapunov(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedD>& d);

template <typename DerivedA, typename DerivedV, typename DerivedD>
double lyapunov_residual(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedV>& v,
                         const Eigen::MatrixBase<DerivedD>& d) {
    return (a * v + v * a.transpose() + d).norm();
}

// Symmetrised vacuum-noise diffusion on (X_c, Y_c): kappa_c / 2 each.
Eigen::Matrix4d diffusion_matrix(const SystemParams& p);

// Steady-state symmetrised covariance of (Q, P, X_c, Y_c).
// RegimeError for gamma_m > 0; InstabilityError if the drift is not stable.
CovarianceMatrix lyapunov_covariance(const SystemParams& p);

struct LangevinSpec {
    std::uint64_t seed{12345};
    double duration{200.0};
    double dt{0.0};  // 0 selects 0.01 / max(omega_m, kappa_c)
    int trajectories{1000};
    unsigned threads{1};
};

struct LangevinMoments {
    CovarianceMatrix covariance;
    CovarianceMatrix standard_error;
    int trajectories;
    long steps;
    double dt;
};

// Euler-Maruyama ensemble started at the origin; moments are taken at
// t = duration. Each trajectory owns a generator seeded from (seed, index).
LangevinMoments langevin_trajectory(const SystemParams& p, const LangevinSpec& spec);

// ---------------------------------------------------------------------------

template <typename DerivedA, typename DerivedD>
auto solve_lyapunov(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedD>& d) {
    constexpr int N = DerivedA::RowsAtCompileTime;
    static_assert(N != Eigen::Dynamic, "solve_lyapunov expects a fixed-size matrix");
    using Square = Eigen::Matrix<double, N, N>;
    using Big = Eigen::Matrix<double, N * N, N * N>;
    using Vec = Eigen::Matrix<double, N * N, 1>;
    const Square am = a;
    const Square id = Square::Identity();
    const Big op = Eigen::kroneckerProduct(id, am) + Eigen::kroneckerProduct(am, id);
    const Square rhs = -d;
    const Vec vec_v = op.fullPivLu().solve(Eigen::Map<const Vec>(rhs.data()));
    Square v = Eigen::Map<const Square>(vec_v.data());
    return Square(0.5 * (v + v.transpose()));
}

}  // namespace optobath
