#include "optobath/validation.hpp"

#include "optobath/bath_spectrum.hpp"
#include "optobath/errors.hpp"
#include "optobath/io.hpp"
#include "optobath/linear_response.hpp"
#include "optobath/parallel.hpp"
#include "optobath/photon_rates.hpp"
#include "optobath/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

namespace optobath::validation {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double pi = std::numbers::pi;

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(b), std::numeric_limits<double>::min());
    return std::abs(a - b) / scale;
}

double rel_diff(Complex a, Complex b) {
    const double scale = std::max(std::abs(b), std::numeric_limits<double>::min());
    return std::abs(a - b) / scale;
}

template <class... Args>
std::string format(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

// Passes when measured <= threshold.
CheckResult bound(std::string name, double measured, double threshold, std::string detail = {}) {
    const bool ok = measured <= threshold;
    return {std::move(name), ok ? Status::pass : Status::fail, measured, threshold,
            std::move(detail)};
}

CheckResult skip(std::string name, std::string reason) {
    return {std::move(name), Status::skipped, nan, nan, std::move(reason)};
}

Eigen::ArrayXd check_grid() { return log_grid(1e-3, 4.0, 100); }

// Quadratic extrapolation to x = 0 through three samples.
double extrapolate_to_zero(const double (&x)[3], const double (&f)[3]) {
    double out = 0.0;
    for (int i = 0; i < 3; ++i) {
        double w = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != i) w *= x[j] / (x[j] - x[i]);
        out += w * f[i];
    }
    return out;
}

SystemParams fig1_lossless_limit() {
    SystemParams p = presets::fig1_cooled();
    p.gamma_m = 0.0;
    return p;
}

// Share of the integral of Gamma_+ (or Gamma_-) over [lo, hi] that lies below cut.
double low_band_fraction(const SystemParams& p, bool plus, double lo, double cut, double hi) {
    auto f = [&](double w) {
        const GammaRates g = gamma_rates(w, p);
        return plus ? g.plus : g.minus;
    };
    std::vector<double> cuts = spectral_breakpoints(p);
    cuts.push_back(cut);
    const auto low = quad::integrate<double>(f, lo, cut, cuts);
    const auto high = quad::integrate<double>(f, cut, hi, cuts);
    if (!low.converged || !high.converged)
        throw QuadratureError("bandwidth_gain: quadrature did not converge",
                              std::max(low.abs_error, high.abs_error));
    return low.value / (low.value + high.value);
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

// ---------------------------------------------------------------- acceptance

CheckResult temperature_reduction() {
    const SystemParams p = presets::fig1_cooled();
    const double b = beta_eff_low(p) * p.omega_m;
    const double t_ratio = p.beta / b;
    const double err = std::abs(b - 2.838);
    const double decades = std::abs(std::log10(t_ratio / 1e-5));
    CheckResult r = bound("acceptance.temperature_reduction", err, 1e-3,
                          format("hbar omega_m beta_eff = %.6f, T_eff/T = %.3e (%.2f decades from 1e-5)",
                                 b, t_ratio, decades));
    if (decades > 1.0) r.status = Status::fail;
    return r;
}

CheckResult threshold_identity() {
    double worst = 0.0;
    for (double ratio : presets::fig3_ratios) {
        const SystemParams p = presets::fig3(ratio);
        worst = std::max(worst, rel_diff(g_c_max(p), p.kappa_c / 2.0));
    }
    return bound("acceptance.threshold_identity", worst, 1e-12,
                 format("max |g_c,max - kappa_c/2| / (kappa_c/2) = %.3e", worst));
}

CheckResult flat_temperature() {
    const double h = 1e-3;
    auto c2_over_c0 = [h](const SystemParams& p) {
        const double c0 = beta_opt_expansion(p).constant;
        const double outer = beta_opt(2 * h, p) + beta_opt(-2 * h, p);
        const double inner = beta_opt(h, p) + beta_opt(-h, p);
        return (outer - inner) / (6.0 * h * h) / c0;
    };
    SystemParams flat = fig1_lossless_limit();
    flat.delta_c = optimal_detuning(flat.kappa_c);
    SystemParams off = flat;
    off.kappa_c *= 1.1;
    const double r_flat = std::abs(c2_over_c0(flat));
    const double r_off = std::abs(c2_over_c0(off));
    CheckResult r = bound("acceptance.flat_temperature", r_flat, 1e-6,
                          format("|c2/c0| = %.3e at 4 Delta_c^2 = 3 kappa_c^2, %.3e with kappa_c +10%%",
                                 r_flat, r_off));
    if (!(r_off > 1e-2)) r.status = Status::fail;
    return r;
}

CheckResult detailed_balance() {
    const SystemParams p = presets::fig1_cooled();
    const Eigen::ArrayXd grid = check_grid();
    double worst = 0.0;
    bool identical = true;
    for (double w : grid) {
        const GammaRates g = gamma_rates(w, p);
        worst = std::max(worst, rel_diff(g.minus / g.plus, std::exp(w * beta_eff(w, p))));
        identical = identical && occupation_with_loss(w, p) == occupation(w, p).n_bar;
    }
    CheckResult r = bound("acceptance.detailed_balance", worst, 1e-12,
                          format("max rel |Gamma_-/Gamma_+ - exp(Omega beta_eff)| = %.3e; "
                                 "lossless occupation %s",
                                 worst, identical ? "identical" : "DIFFERS"));
    if (!identical) r.status = Status::fail;
    return r;
}

double stability_boundary_g_c(const SystemParams& base) {
    auto abscissa = [&](double g) {
        SystemParams p = base;
        p.g_c = g;
        p.g_a = 0.0;
        return eigen_stable(drift_matrix_qc(p)).spectral_abscissa;
    };
    double lo = 1e-3, hi = 4.0 * std::sqrt(base.omega_m * base.omega_m + base.kappa_c * base.kappa_c);
    if (!(abscissa(lo) < 0.0) || !(abscissa(hi) > 0.0))
        throw RegimeError("stability_boundary_g_c: boundary not bracketed");
    for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (abscissa(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CheckResult stability_oracle(const StabilityOracleSpec& spec) {
    SystemParams base = fig1_lossless_limit();
    base.delta_c = optimal_detuning(base.kappa_c);

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> gc(0.0, 0.8), ga(0.0, 0.6), da(-5.0, -0.1);
    std::vector<SystemParams> draws(static_cast<std::size_t>(spec.draws), base);
    for (auto& p : draws) {
        p.g_c = gc(rng);
        p.g_a = ga(rng);
        p.delta_a = da(rng);
    }
    enum Outcome : char { agree, disagree, marginal };
    std::vector<char> outcome(draws.size());
    parallel_for(draws.size(), spec.threads, [&](std::size_t i) {
        const FullCriteria c = full_criteria(draws[i]);
        const EigenVerdict e = eigen_stable(drift_matrix_full(draws[i]));
        if (e.verdict == Verdict::Marginal || c.verdict == Verdict::Marginal)
            outcome[i] = marginal;
        else
            outcome[i] = c.verdict == e.verdict ? agree : disagree;
    });
    const auto n_dis = std::count(outcome.begin(), outcome.end(), disagree);
    const auto n_marg = std::count(outcome.begin(), outcome.end(), marginal);

    const double boundary = stability_boundary_g_c(base);
    const double boundary_err = rel_diff(boundary, g_c_max(base));
    CheckResult r = bound("acceptance.stability_oracle", static_cast<double>(n_dis), 0.0,
                          format("%d draws, %ld disagreements, %ld marginal; g_a=0 boundary %.12f "
                                 "vs g_c,max %.12f (rel %.2e)",
                                 spec.draws, static_cast<long>(n_dis), static_cast<long>(n_marg),
                                 boundary, g_c_max(base), boundary_err));
    if (!(boundary_err <= 1e-6)) r.status = Status::fail;
    return r;
}

CheckResult representation_equivalence() {
    const SystemParams p = fig1_lossless_limit();
    double worst = 0.0;
    std::string detail;
    for (double t : {0.0, 0.5, 1.0, 5.0}) {
        const Complex direct = c_qq_total(t, p).value;
        const Complex rep = c_qq_representation(t, p).value;
        const double e = rel_diff(rep, direct);
        worst = std::max(worst, e);
        detail += format("t=%g: %.3e; ", t, e);
    }
    detail.resize(detail.size() - 2);
    return bound("acceptance.representation_equivalence", worst, 1e-3, detail);
}

CheckResult variance_consistency(const LangevinSpec& spec) {
    const SystemParams p = fig1_lossless_limit();
    const double lyap = lyapunov_covariance(p)(0, 0);
    const double spectral = spectral_position_variance(p).value / (2.0 * p.zpf_squared());
    const double err = rel_diff(lyap, spectral);
    const LangevinMoments mc = langevin_trajectory(p, spec);
    const double sigmas = std::abs(mc.covariance(0, 0) - lyap) / mc.standard_error(0, 0);
    CheckResult r = bound("acceptance.variance_consistency", err, 1e-3,
                          format("<Q^2> Lyapunov %.8f, spectral %.8f (rel %.2e); Monte Carlo %.5f "
                                 "+/- %.5f (%.2f sigma, %d trajectories)",
                                 lyap, spectral, err, mc.covariance(0, 0), mc.standard_error(0, 0),
                                 sigmas, mc.trajectories));
    if (!(sigmas <= 3.0)) r.status = Status::fail;
    return r;
}

CheckResult reduction_chain() {
    const SystemParams cooled = fig1_lossless_limit();
    SystemParams bare = presets::fig1_cooled();
    bare.g_c = 0.0;
    double opt = 0.0, bath = 0.0;
    for (double w : check_grid()) {
        opt = std::max(opt, rel_diff(beta_eff(w, cooled), beta_opt(w, cooled)));
        bath = std::max(bath, rel_diff(beta_eff(w, bare), bare.beta));
    }
    const double eta = rel_diff(eta_eff(cooled), eta_opt(cooled));
    const double worst = std::max({opt, bath, eta});
    return bound("acceptance.reduction_chain", worst, 1e-12,
                 format("beta_eff(gamma_m=0) vs beta_opt %.2e, eta_eff vs eta_opt %.2e, "
                        "beta_eff(g_c=0) vs beta %.2e",
                        opt, eta, bath));
}

CheckResult bandwidth_gain() {
    const SystemParams cooled = presets::fig1_cooled();
    const SystemParams bare = presets::fig1_bare();
    const double lo = 1e-4 * cooled.omega_m, cut = 0.5 * cooled.omega_m, hi = 4.0 * cooled.omega_m;
    const double plus = low_band_fraction(cooled, true, lo, cut, hi) /
                        low_band_fraction(bare, true, lo, cut, hi);
    const double minus = low_band_fraction(cooled, false, lo, cut, hi) /
                         low_band_fraction(bare, false, lo, cut, hi);
    double pointwise = std::numeric_limits<double>::infinity();
    for (double w : log_grid(lo, cut, 200)) {
        const GammaRates c = gamma_rates(w, cooled), b = gamma_rates(w, bare);
        pointwise = std::min({pointwise, c.plus / b.plus, c.minus / b.minus});
    }
    const double gain = std::min(plus, minus);
    return {"acceptance.bandwidth_gain", gain > 1e3 ? Status::pass : Status::fail, gain, 1e3,
            format("share of Gamma weight on [1e-4, 4] below 0.5 omega_m, cooled/bare: Gamma_+ %.3e, "
                   "Gamma_- %.3e; min pointwise Gamma ratio below 0.5 omega_m %.1f",
                   plus, minus, pointwise)};
}

std::vector<CheckResult> acceptance_suite(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    auto guarded = [&](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({std::string("acceptance.") + name, Status::fail, nan, nan, e.what()});
        }
    };
    guarded("temperature_reduction", [] { return temperature_reduction(); });
    guarded("threshold_identity", [] { return threshold_identity(); });
    guarded("flat_temperature", [] { return flat_temperature(); });
    guarded("detailed_balance", [] { return detailed_balance(); });
    guarded("stability_oracle", [&] {
        return stability_oracle({opt.stability_draws, opt.seed, opt.threads});
    });
    guarded("representation_equivalence", [] { return representation_equivalence(); });
    guarded("variance_consistency", [&] {
        LangevinSpec spec;
        spec.seed = opt.seed;
        spec.trajectories = opt.trajectories;
        spec.threads = opt.threads;
        return variance_consistency(spec);
    });
    guarded("reduction_chain", [] { return reduction_chain(); });
    guarded("bandwidth_gain", [] { return bandwidth_gain(); });
    return out;
}

// ---------------------------------------------------------------- invariants

std::vector<CheckResult> invariant_checks(const SystemParams& p) {
    p.validate();
    std::vector<CheckResult> out;
    const Eigen::ArrayXd grid = check_grid();
    auto guarded = [&](const char* name, auto&& fn) {
        try {
            out.push_back(fn(name));
        } catch (const std::exception& e) {
            out.push_back({name, Status::fail, nan, nan, e.what()});
        }
    };

    guarded("linear_response.conjugate_symmetry", [&](const char* name) {
        double worst = 0.0;
        int poles = 0;
        for (double w : grid) {
            try {
                worst = std::max({worst, rel_diff(chi_q(-w, p), std::conj(chi_q(w, p))),
                                  rel_diff(chi_q0(-w, p), std::conj(chi_q0(w, p))),
                                  rel_diff(self_energy(-w, p), std::conj(self_energy(w, p)))});
            } catch (const PoleError&) {
                ++poles;
            }
        }
        return bound(name, worst, 1e-14, format("%d pole points skipped", poles));
    });

    guarded("linear_response.lorentzian_peak", [&](const char* name) {
        const double peak = lorentzian(-p.delta_c, p);
        int violations = 0;
        for (double w : grid) {
            if (!(lorentzian(w, p) > 0.0) || lorentzian(w, p) > peak) ++violations;
            if (!(lorentzian(-w, p) > 0.0) || lorentzian(-w, p) > peak) ++violations;
        }
        return bound(name, violations, 0.0, "points with L <= 0 or L above L[-Delta_c]");
    });

    guarded("bath_spectrum.coth_equivalence", [&](const char* name) {
        const double g2 = pi * p.cooling_strength();
        double worst = 0.0;
        int points = 0;
        for (double w : grid) {
            const double b = beta_eff(w, p);
            if (!is_thermal(b)) continue;
            const double j = ohmic_j(w, p);
            const double lp = lorentzian(w, p), lm = lorentzian(-w, p);
            const double coth_bath = 1.0 + 2.0 / std::expm1(w * p.beta);
            const double coth_form =
                (j * coth_bath + g2 * (lp + lm)) / (j + g2 * lorentzian_asymmetry(w, p));
            worst = std::max(worst, rel_diff(1.0 + 2.0 / std::expm1(w * b), coth_form));
            ++points;
        }
        if (points == 0) return skip(name, "no thermal grid points");
        return bound(name, worst, 1e-10, format("%d thermal points", points));
    });

    guarded("bath_spectrum.reduction_chain", [&](const char* name) {
        if (!(p.delta_c < 0.0) || !(p.g_c > 0.0))
            return skip(name, "requires red-detuned cooling (Delta_c < 0, g_c > 0)");
        SystemParams q = p;
        q.gamma_m = 0.0;
        double worst = 0.0;
        for (double w : grid) worst = std::max(worst, rel_diff(beta_eff(w, q), beta_opt(w, q)));
        const double low = rel_diff(beta_eff_low(q), beta_opt_expansion(q).constant);
        const double eta = rel_diff(eta_eff(q), eta_opt(q));
        return bound(name, std::max({worst, low, eta}), 1e-12,
                     format("beta_eff/beta_opt %.2e, low-frequency %.2e, eta %.2e", worst, low, eta));
    });

    guarded("bath_spectrum.low_frequency_limits", [&](const char* name) {
        if (!(p.gamma_m > 0.0) && !(p.g_c > 0.0)) return skip(name, "no bath coupling");
        const double xs[3] = {1e-3, 1e-4, 1e-5};
        double slope[3], beta[3];
        for (int i = 0; i < 3; ++i) {
            slope[i] = j_eff(xs[i], p) / xs[i];
            beta[i] = beta_eff(xs[i], p);
        }
        const double e_eta = rel_diff(extrapolate_to_zero(xs, slope), eta_eff(p));
        const double e_beta = rel_diff(extrapolate_to_zero(xs, beta), beta_eff_low(p));
        return bound(name, std::max(e_eta, e_beta), 1e-4,
                     format("J_eff/omega -> eta_eff %.2e, beta_eff -> beta_eff_low %.2e", e_eta, e_beta));
    });

    guarded("bath_spectrum.cooling_direction", [&](const char* name) {
        if (!(p.delta_c < 0.0)) return skip(name, "requires Delta_c < 0");
        int tested = 0, violations = 0;
        for (double w : grid) {
            if (!(lorentzian(w, p) / lorentzian(-w, p) > std::exp(w * p.beta))) continue;
            ++tested;
            if (!(beta_eff(w, p) > p.beta)) ++violations;
        }
        return bound(name, violations, 0.0, format("%d cooling points tested", tested));
    });

    const bool has_probe = p.g_a > 0.0;
    auto thermal = [&](double w) { return is_thermal(beta_eff(w, p)); };

    guarded("photon_rates.detailed_balance", [&](const char* name) {
        if (!has_probe) return skip(name, "g_a = 0: rates vanish identically");
        double worst = 0.0;
        for (double w : grid) {
            if (!thermal(w)) continue;
            const GammaRates g = gamma_rates(w, p);
            worst = std::max(worst, rel_diff(g.minus / g.plus, std::exp(w * beta_eff(w, p))));
        }
        return bound(name, worst, 1e-12);
    });

    guarded("photon_rates.two_path", [&](const char* name) {
        if (!has_probe) return skip(name, "g_a = 0: rates vanish identically");
        const double k = p.g_a * p.g_a / p.zpf_squared();
        double worst = 0.0;
        for (double w : grid) {
            if (!thermal(w)) continue;
            const GammaRates g = gamma_rates(w, p);
            worst = std::max({worst, rel_diff(g.plus, k * s_qq(-w, p)),
                              rel_diff(g.minus, k * s_qq(w, p))});
        }
        return bound(name, worst, 1e-12);
    });

    guarded("photon_rates.loss_bound", [&](const char* name) {
        int violations = 0;
        for (double w : grid) {
            if (!thermal(w)) continue;
            const double lossy = occupation_with_loss(w, p);
            const double n = occupation(w, p).n_bar;
            const bool ok = (p.kappa_a == 0.0 || !has_probe) ? lossy <= n && (p.kappa_a > 0.0 || lossy == n)
                                                             : lossy < n;
            if (!ok) ++violations;
        }
        return bound(name, violations, 0.0,
                     p.kappa_a == 0.0 ? "kappa_a = 0: exact equality required" : "strict inequality");
    });

    guarded("photon_rates.fgr_balance", [&](const char* name) {
        if (!has_probe) return skip(name, "g_a = 0: rates vanish identically");
        double worst = 0.0;
        for (double w : grid) {
            if (!thermal(w)) continue;
            const double n = occupation(w, p).n_bar;
            const GammaRates g = gamma_rates(w, p);
            worst = std::max(worst, rel_diff(n * g.minus, (n + 1.0) * g.plus));
        }
        return bound(name, worst, 1e-12, "(n+1) Gamma_+ = n Gamma_- at n = occupation");
    });

    guarded("stability.rh_threshold", [&](const char* name) {
        if (!(p.delta_c < 0.0)) return skip(name, "requires Delta_c < 0");
        auto value = [&](double g) {
            SystemParams q = p;
            q.g_c = g;
            return routh_hurwitz_qc(q).value;
        };
        double lo = 0.0, hi = 1.0;
        while (value(hi) > 0.0) hi *= 2.0;
        for (int i = 0; i < 200 && hi - lo > 2 * std::numeric_limits<double>::epsilon() * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (value(mid) > 0.0 ? lo : hi) = mid;
        }
        const double e = rel_diff(0.5 * (lo + hi), g_c_max(p));
        return bound(name, e, 1e-12, format("Routh-Hurwitz root %.15f", 0.5 * (lo + hi)));
    });

    const StabilityReport report = analyze_stability(p);
    const bool qc_stable = report.eig_stable_qc == Verdict::Stable;
    const std::string unstable_reason =
        format("drift matrix not stable (4x4 abscissa %.3e, verdict %s)", report.spectral_abscissa_qc,
               std::string(to_string(report.eig_stable_qc)).c_str());

    guarded("stability.criteria_agreement", [&](const char* name) {
        if (!report.criteria) return skip(name, "closed form requires gamma_m = 0 and optimal detuning");
        if (report.eig_stable == Verdict::Marginal || report.criteria->verdict == Verdict::Marginal)
            return skip(name, "marginal case");
        return bound(name, report.disagrees() ? 1.0 : 0.0, 0.0,
                     format("criteria %s, eigenvalues %s",
                            std::string(to_string(report.criteria->verdict)).c_str(),
                            std::string(to_string(report.eig_stable)).c_str()));
    });

    guarded("stability.damping_monotone", [&](const char* name) {
        SystemParams q = p;
        q.gamma_m = 0.0;
        if (eigen_stable(drift_matrix_qc(q)).verdict != Verdict::Stable)
            return skip(name, "4x4 system not stable at gamma_m = 0");
        int violations = 0;
        for (double g : {1e-6, 1e-3, 1e-1, p.gamma_m}) {
            if (!(g > 0.0)) continue;
            q.gamma_m = g;
            if (eigen_stable(drift_matrix_qc(q)).verdict != Verdict::Stable) ++violations;
        }
        return bound(name, violations, 0.0, "stable at gamma_m = 0 implies stable for gamma_m > 0");
    });

    guarded("correlation.lyapunov_variance", [&](const char* name) {
        SystemParams q = p;
        q.gamma_m = 0.0;
        const EigenVerdict e = eigen_stable(drift_matrix_qc(q));
        if (e.verdict != Verdict::Stable)
            return skip(name, format("gamma_m = 0 drift matrix not stable (abscissa %.3e)",
                                     e.spectral_abscissa));
        const double lyap = lyapunov_covariance(q)(0, 0);
        const double spectral = spectral_position_variance(q).value / (2.0 * q.zpf_squared());
        return bound(name, rel_diff(lyap, spectral), 1e-3,
                     format("Lyapunov %.8f, spectral %.8f (gamma_m = 0)", lyap, spectral));
    });

    guarded("correlation.representation", [&](const char* name) {
        if (!qc_stable) return skip(name, unstable_reason);
        double worst = 0.0;
        for (double t : {0.0, 0.5, 1.0, 5.0})
            worst = std::max(worst, rel_diff(c_qq_representation(t, p).value, c_qq_total(t, p).value));
        return bound(name, worst, 1e-3, "t in {0, 0.5, 1, 5}");
    });

    return out;
}

Report validate(const SystemParams& p, const ValidateOptions& opt) {
    Report r;
    r.checks = invariant_checks(p);
    if (opt.acceptance) {
        auto acc = acceptance_suite(opt.suite);
        r.checks.insert(r.checks.end(), acc.begin(), acc.end());
    }
    return r;
}

nlohmann::json report_json(const Report& r, const SystemParams& p) {
    auto number = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"status", to_string(c.status)},
                          {"measured", number(c.measured)},
                          {"threshold", number(c.threshold)},
                          {"detail", c.detail}});
    }
    return {{"passed", r.passed()},
            {"counts",
             {{"pass", r.count(Status::pass)},
              {"fail", r.count(Status::fail)},
              {"skipped", r.count(Status::skipped)}}},
            {"params", io::params_to_json(p)},
            {"checks", checks}};
}

}  // namespace optobath::validation
