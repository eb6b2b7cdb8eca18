#include "optobath/bath_spectrum.hpp"

#include "optobath/errors.hpp"
#include "optobath/linear_response.hpp"
#include "optobath/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace optobath {

namespace {

constexpr double pi = std::numbers::pi;

// omega_m (Delta_c^2 + kappa_c^2/4) + 4 g_c^2 Delta_c; vanishes at g_c,max.
double threshold_denominator(const SystemParams& p) {
    const double den = p.omega_m * p.cooling_detuning_norm() + 4.0 * p.g_c * p.g_c * p.delta_c;
    if (std::abs(den) <= 1e-14 * p.omega_m * p.cooling_detuning_norm())
        throw DivergenceError("Ohmic slope diverges at the cooling threshold g_c = g_c,max");
    return den;
}

}  // namespace

double ohmic_j(double omega, const SystemParams& p) {
    return p.gamma_m * omega * std::exp(-omega / p.cutoff);
}

double j_eff(double omega, const SystemParams& p) {
    const double bare = ohmic_j(omega, p);
    const double optical = pi * p.cooling_strength() * lorentzian_asymmetry(omega, p);
    return std::norm(chi_q(omega, p)) * (bare + optical);
}

double beta_eff(double omega, const SystemParams& p) {
    const double optical = pi * p.cooling_strength();
    if (optical == 0.0) return p.beta;
    const double bare = ohmic_j(omega, p);
    const double n = thermal_occupation(omega, p.beta);
    // exp(w beta_eff) - 1 = (J + pi G^2 (L[w] - L[-w])) / (J n + pi G^2 L[-w])
    const double excess = bare + optical * lorentzian_asymmetry(omega, p);
    const double absorb = bare * n + optical * lorentzian(-omega, p);
    if (!(absorb > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::log1p(excess / absorb) / omega;
}

double beta_opt(double omega, const SystemParams& p) {
    const double x = omega + p.delta_c;
    const double shifted = x * x + 0.25 * p.kappa_c * p.kappa_c;
    return std::log1p(-4.0 * omega * p.delta_c / shifted) / omega;
}

OmegaExpansion beta_opt_expansion(const SystemParams& p) {
    if (p.delta_c == 0.0) throw RegimeError("beta_opt_expansion: Delta_c must be nonzero");
    const double d = p.delta_c;
    const double norm = p.cooling_detuning_norm();
    const double k2 = p.kappa_c * p.kappa_c;
    return {-4.0 * d / norm, -d * (4.0 * d * d - 3.0 * k2) / (3.0 * norm * norm * norm)};
}

double eta_opt(const SystemParams& p) {
    const double den = threshold_denominator(p);
    return -4.0 * p.g_c * p.g_c * p.delta_c * p.kappa_c * p.omega_m /
           (p.omega_m * p.omega_m * den * den);
}

double g_c_max(const SystemParams& p) {
    if (!(p.delta_c < 0.0)) throw RegimeError("g_c_max: defined only for red detuning Delta_c < 0");
    return std::sqrt(p.omega_m * p.cooling_detuning_norm() / (4.0 * std::abs(p.delta_c)));
}

double beta_eff_low(const SystemParams& p) {
    const double norm = p.cooling_detuning_norm();
    const double g2 = p.g_c * p.g_c;
    const double num = p.gamma_m * norm * norm - 4.0 * g2 * p.delta_c * p.kappa_c * p.omega_m;
    const double den = norm * (p.gamma_m * norm + g2 * p.beta * p.kappa_c * p.omega_m);
    if (!(den > 0.0)) throw RegimeError("beta_eff_low: no bath (gamma_m = g_c = 0)");
    return p.beta * num / den;
}

GammaExpansion beta_eff_low_expansion(const SystemParams& p) {
    if (!(p.g_c > 0.0)) throw RegimeError("beta_eff_low_expansion: requires g_c > 0");
    const double norm = p.cooling_detuning_norm();
    const double zeroth = -4.0 * p.delta_c / norm;
    const double first = (4.0 * p.delta_c + p.beta * norm) /
                         (p.g_c * p.g_c * p.beta * p.kappa_c * p.omega_m);
    return {zeroth, first};
}

double eta_eff(const SystemParams& p) {
    const double den = threshold_denominator(p);
    const double norm = p.cooling_detuning_norm();
    const double num = p.gamma_m * norm * norm -
                       4.0 * p.g_c * p.g_c * p.delta_c * p.kappa_c * p.omega_m;
    return num / (p.omega_m * p.omega_m * den * den);
}

double spectral_upper_limit(const SystemParams& p) {
    return std::max({10.0 * p.cutoff, 50.0 * p.kappa_c, 50.0 * p.omega_m});
}

std::vector<double> spectral_breakpoints(const SystemParams& p) {
    std::vector<double> pts;
    const Resonance res = dressed_resonance(p);
    pts.push_back(res.omega);
    for (double k : {1.0, 3.0, 10.0, 30.0, 100.0}) {
        pts.push_back(res.omega - k * res.half_width);
        pts.push_back(res.omega + k * res.half_width);
    }
    pts.push_back(std::abs(p.delta_c));
    pts.push_back(p.omega_m);
    const double upper = spectral_upper_limit(p);
    for (double x = 10.0 * p.omega_m; x < upper; x *= 10.0) pts.push_back(x);
    std::erase_if(pts, [&](double x) { return !(x > 0.0 && x < upper); });
    std::sort(pts.begin(), pts.end());
    return pts;
}

quad::Result<double> damping_kernel(double t, const SystemParams& p, const quad::Tolerance& tol) {
    if (t < 0.0) return {0.0, 0.0, 0, true, 0.0};
    auto integrand = [&](double w) { return j_eff(w, p) / w * std::cos(w * t); };
    const double upper = spectral_upper_limit(p);
    const auto cuts = spectral_breakpoints(p);
    auto r = quad::integrate<double>(integrand, 0.0, upper, cuts, tol);
    if (!r.converged)
        throw QuadratureError("damping_kernel: quadrature did not converge", r.abs_error);
    r.value *= 2.0 / pi;
    r.abs_error *= 2.0 / pi;
    r.tail_bound = 2.0 / pi * std::abs(j_eff(upper, p));
    return r;
}

Eigen::ArrayXd log_grid(double min, double max, int count) {
    if (count < 2) throw ConfigError("grid count must be >= 2");
    if (!(min < max)) throw ConfigError("grid requires min < max");
    if (!(min > 0.0)) throw ConfigError("log grid requires min > 0");
    Eigen::ArrayXd g = Eigen::ArrayXd::LinSpaced(count, std::log(min), std::log(max)).exp();
    g(0) = min;
    g(count - 1) = max;
    return g;
}

Eigen::ArrayXd linear_grid(double min, double max, int count) {
    if (count < 2) throw ConfigError("grid count must be >= 2");
    if (!(min < max)) throw ConfigError("grid requires min < max");
    return Eigen::ArrayXd::LinSpaced(count, min, max);
}

Eigen::ArrayXd default_grid(const SystemParams& p) {
    return log_grid(1e-4 * p.omega_m, 4.0 * p.omega_m, 400);
}

BathSpectrum compute_bath_spectrum(const Eigen::ArrayXd& grid, const SystemParams& p,
                                   unsigned threads) {
    p.validate();
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        if (!(grid(i) > 0.0)) throw ConfigError("spectrum grid entries must be > 0");
        if (i > 0 && !(grid(i) > grid(i - 1)))
            throw ConfigError("spectrum grid must be strictly ascending");
    }
    BathSpectrum s;
    s.grid = grid;
    s.j_eff.resize(grid.size());
    s.beta_eff.resize(grid.size());
    s.flags.assign(static_cast<std::size_t>(grid.size()), flag_none);
    parallel_for(static_cast<std::size_t>(grid.size()), threads, [&](std::size_t i) {
        const double w = grid(static_cast<Eigen::Index>(i));
        const auto k = static_cast<Eigen::Index>(i);
        try {
            s.j_eff(k) = j_eff(w, p);
        } catch (const PoleError&) {
            s.j_eff(k) = std::numeric_limits<double>::quiet_NaN();
            s.flags[i] |= flag_pole_skipped;
        }
        s.beta_eff(k) = beta_eff(w, p);
        if (!is_thermal(s.beta_eff(k))) s.flags[i] |= flag_non_thermal;
    });
    return s;
}

}  // namespace optobath
