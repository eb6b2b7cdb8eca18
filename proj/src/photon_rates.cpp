#include "optobath/photon_rates.hpp"

#include "optobath/bath_spectrum.hpp"
#include "optobath/errors.hpp"
#include "optobath/parallel.hpp"

#include <cmath>
#include <limits>

namespace optobath {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// g_a^2 / q_zpf^2 = 2 g_a^2 omega_m (M = 1)
double probe_coupling(const SystemParams& p) { return 2.0 * p.g_a * p.g_a * p.omega_m; }

}  // namespace

double s_qq(double omega, const SystemParams& p) {
    if (omega == 0.0) throw RegimeError("s_qq: omega must be nonzero");
    const double w = std::abs(omega);
    const double x = w * beta_eff(w, p);
    const double j = j_eff(w, p);
    const double em1 = std::expm1(x);
    return omega > 0.0 ? 2.0 * j * (1.0 + 1.0 / em1) : 2.0 * j / em1;
}

GammaRates gamma_rates(double Omega, const SystemParams& p) {
    if (!(Omega > 0.0)) throw RegimeError("gamma_rates: Omega must be > 0");
    const double x = Omega * beta_eff(Omega, p);
    const double em1 = std::expm1(x);
    const double scale = 2.0 * probe_coupling(p) * j_eff(Omega, p);
    return {scale / em1, scale * (1.0 + 1.0 / em1)};
}

TransitionRates fgr_rates(int n, double Omega, const SystemParams& p) {
    if (n < 0) throw RegimeError("fgr_rates: occupation must be >= 0");
    const GammaRates g = gamma_rates(Omega, p);
    return {(n + 1.0) * g.plus, n * g.minus};
}

Occupation occupation(double Omega, const SystemParams& p, GainPolicy policy) {
    if (!(Omega > 0.0)) throw RegimeError("occupation: Omega must be > 0");
    const double b = beta_eff(Omega, p);
    const double raw = 1.0 / std::expm1(Omega * b);
    if (is_thermal(b)) return {raw, false};
    return {policy == GainPolicy::Raw ? raw : nan, true};
}

double occupation_with_loss(double Omega, const SystemParams& p) {
    if (!(Omega > 0.0)) throw RegimeError("occupation_with_loss: Omega must be > 0");
    const double x = Omega * beta_eff(Omega, p);
    if (p.kappa_a == 0.0) {
        if (!(x > 0.0)) throw RegimeError("occupation_with_loss: no steady state (gain regime)");
        return 1.0 / std::expm1(x);
    }
    const GammaRates g = gamma_rates(Omega, p);
    // (Gamma_- + kappa_a)/Gamma_+ - 1 = expm1(x) + kappa_a/Gamma_+
    const double margin = std::expm1(x) + p.kappa_a / g.plus;
    if (!(margin > 0.0) || g.minus + p.kappa_a <= g.plus)
        throw RegimeError("occupation_with_loss: Gamma_- + kappa_a <= Gamma_+, no steady state");
    return 1.0 / margin;
}

RateTable compute_rate_table(const Eigen::ArrayXd& grid, const SystemParams& p, unsigned threads,
                             GainPolicy policy) {
    p.validate();
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        if (!(grid(i) > 0.0)) throw ConfigError("rate grid entries must be > 0");
        if (i > 0 && !(grid(i) > grid(i - 1)))
            throw ConfigError("rate grid must be strictly ascending");
    }
    const auto n = grid.size();
    RateTable t;
    t.omega = grid;
    t.gamma_plus.resize(n);
    t.gamma_minus.resize(n);
    t.n_bar.resize(n);
    t.n_bar_lossy.resize(n);
    t.flags.assign(static_cast<std::size_t>(n), flag_none);
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
        const auto k = static_cast<Eigen::Index>(i);
        const double w = grid(k);
        try {
            const GammaRates g = gamma_rates(w, p);
            t.gamma_plus(k) = g.plus;
            t.gamma_minus(k) = g.minus;
        } catch (const PoleError&) {
            t.gamma_plus(k) = t.gamma_minus(k) = t.n_bar(k) = t.n_bar_lossy(k) = nan;
            t.flags[i] |= flag_pole_skipped;
            return;
        }
        const Occupation occ = occupation(w, p, policy);
        t.n_bar(k) = occ.n_bar;
        if (occ.non_equilibrium) t.flags[i] |= flag_non_thermal;
        try {
            t.n_bar_lossy(k) = occupation_with_loss(w, p);
        } catch (const RegimeError&) {
            t.n_bar_lossy(k) = nan;
        }
    });
    return t;
}

}  // namespace optobath
