#include "optobath/correlation_oracle.hpp"

#include "optobath/bath_spectrum.hpp"
#include "optobath/errors.hpp"
#include "optobath/linear_response.hpp"
#include "optobath/parallel.hpp"
#include "optobath/photon_rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace optobath {

namespace {

constexpr double pi = std::numbers::pi;

template <class F>
CorrelationValue integrate_spectral(F&& integrand, const SystemParams& p,
                                    const quad::Tolerance& tol, const char* what) {
    const double upper = spectral_upper_limit(p);
    const auto cuts = spectral_breakpoints(p);
    const auto r = quad::integrate<Complex>(integrand, 0.0, upper, cuts, tol);
    if (!r.converged) throw QuadratureError(std::string(what) + ": quadrature did not converge",
                                            r.abs_error);
    return {r.value, r.abs_error, std::abs(integrand(upper)) * upper};
}

// coth(x/2) = 1 + 2/(e^x - 1)
double coth_half(double x) { return 1.0 + 2.0 / std::expm1(x); }

}  // namespace

CorrelationValue c_qq_thermal(double t, const SystemParams& p, const quad::Tolerance& tol) {
    if (p.gamma_m == 0.0) return {0.0, 0.0, 0.0};
    auto f = [&](double w) -> Complex {
        const double weight = ohmic_j(w, p) * std::norm(chi_q(w, p)) / pi;
        return weight * Complex{coth_half(p.beta * w) * std::cos(w * t), -std::sin(w * t)};
    };
    return integrate_spectral(f, p, tol, "c_qq_thermal");
}

CorrelationValue c_qq_optical(double t, const SystemParams& p, const quad::Tolerance& tol) {
    if (p.g_c == 0.0) return {0.0, 0.0, 0.0};
    auto f = [&](double w) -> Complex {
        const double weight = p.cooling_strength() * std::norm(chi_q(w, p));
        const Complex phase = std::polar(1.0, -w * t);
        return weight * (phase * lorentzian(w, p) + std::conj(phase) * lorentzian(-w, p));
    };
    return integrate_spectral(f, p, tol, "c_qq_optical");
}

CorrelationValue c_qq_total(double t, const SystemParams& p, const quad::Tolerance& tol) {
    const auto a = c_qq_thermal(t, p, tol);
    const auto b = c_qq_optical(t, p, tol);
    return {a.value + b.value, a.abs_error + b.abs_error, a.tail_bound + b.tail_bound};
}

CorrelationValue c_qq_representation(double t, const SystemParams& p, const quad::Tolerance& tol) {
    auto f = [&](double w) -> Complex {
        const double j = j_eff(w, p);
        const double x = w * beta_eff(w, p);
        return (j / pi) * Complex{coth_half(x) * std::cos(w * t), -std::sin(w * t)};
    };
    return integrate_spectral(f, p, tol, "c_qq_representation");
}

std::string_view to_string(Contribution c) {
    switch (c) {
        case Contribution::thermal: return "thermal";
        case Contribution::optical: return "optical";
        case Contribution::total: return "total";
    }
    return "unknown";
}

CorrelationSeries correlation_series(const std::vector<double>& times, const SystemParams& p,
                                     Contribution tag, const quad::Tolerance& tol,
                                     unsigned threads) {
    p.validate();
    CorrelationSeries s{times, std::vector<Complex>(times.size()), tag};
    parallel_for(times.size(), threads, [&](std::size_t i) {
        const double t = std::abs(times[i]);
        CorrelationValue v{};
        switch (tag) {
            case Contribution::thermal: v = c_qq_thermal(t, p, tol); break;
            case Contribution::optical: v = c_qq_optical(t, p, tol); break;
            case Contribution::total: v = c_qq_total(t, p, tol); break;
        }
        s.values[i] = times[i] < 0.0 ? std::conj(v.value) : v.value;
    });
    return s;
}

std::vector<Complex> sample_correlation_uniform(const SystemParams& p, double dt, int count,
                                                double upper, double max_panel, int order) {
    if (count < 1 || !(dt > 0.0) || !(upper > 0.0) || !(max_panel > 0.0))
        throw ConfigError("sample_correlation_uniform: invalid sampling spec");

    // panel edges: resonance breakpoints, each gap split to at most max_panel
    std::vector<double> edges{0.0};
    for (double x : spectral_breakpoints(p))
        if (x < upper) edges.push_back(x);
    edges.push_back(upper);
    const quad::GaussLegendre base = quad::gauss_legendre(order);

    // C(t) = sum_k [a_k e^{-i w_k t} + b_k e^{+i w_k t}]
    std::vector<double> nodes, pos, neg;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double len = edges[e + 1] - edges[e];
        const int panels = std::max(1, static_cast<int>(std::ceil(len / max_panel)));
        const double width = len / panels;
        for (int k = 0; k < panels; ++k) {
            const double c = edges[e] + (k + 0.5) * width;
            for (int j = 0; j < order; ++j) {
                const double w = c + 0.5 * width * base.nodes[j];
                const double wt = 0.5 * width * base.weights[j];
                const double chi2 = std::norm(chi_q(w, p));
                const double n = thermal_occupation(w, p.beta);
                const double thermal = ohmic_j(w, p) * chi2 / pi;
                const double optical = p.cooling_strength() * chi2;
                nodes.push_back(w);
                pos.push_back(wt * (thermal * (n + 1.0) + optical * lorentzian(w, p)));
                neg.push_back(wt * (thermal * n + optical * lorentzian(-w, p)));
            }
        }
    }

    std::vector<Complex> out(static_cast<std::size_t>(count), Complex{});
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Complex step = std::polar(1.0, -nodes[k] * dt);
        Complex phase{1.0, 0.0};
        for (int j = 0; j < count; ++j) {
            out[j] += pos[k] * phase + neg[k] * std::conj(phase);
            phase *= step;
        }
    }
    return out;
}

double spectrum_from_series(const std::vector<Complex>& series, double dt, double omega) {
    if (series.size() < 2) throw ConfigError("spectrum_from_series: need at least two samples");
    Complex acc{};
    const Complex step = std::polar(1.0, omega * dt);
    Complex phase{1.0, 0.0};
    const std::size_t last = series.size() - 1;
    for (std::size_t j = 0; j <= last; ++j) {
        const double w = (j == 0 || j == last) ? 0.5 : 1.0;
        acc += w * phase * series[j];
        phase *= step;
    }
    return 2.0 * (acc * dt).real();
}

quad::Result<double> spectral_position_variance(const SystemParams& p, const quad::Tolerance& tol) {
    // S(w) + S(-w) over w > 0
    auto f = [&](double w) { return s_qq(w, p) + s_qq(-w, p); };
    const double upper = spectral_upper_limit(p);
    auto r = quad::integrate<double>(f, 0.0, upper, spectral_breakpoints(p), tol);
    if (!r.converged)
        throw QuadratureError("spectral_position_variance: quadrature did not converge",
                              r.abs_error);
    r.tail_bound = std::abs(f(upper)) * upper / (2.0 * pi);
    r.value /= 2.0 * pi;
    r.abs_error /= 2.0 * pi;
    return r;
}

Eigen::Matrix4d diffusion_matrix(const SystemParams& p) {
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d(2, 2) = d(3, 3) = 0.5 * p.kappa_c;
    return d;
}

CovarianceMatrix lyapunov_covariance(const SystemParams& p) {
    p.validate();
    if (p.gamma_m != 0.0)
        throw RegimeError("lyapunov_covariance: white-noise model requires gamma_m = 0");
    const Eigen::Matrix4d a = drift_matrix_qc(p);
    if (eigen_stable(a).verdict != Verdict::Stable)
        throw InstabilityError("lyapunov_covariance: drift matrix is not stable");
    return solve_lyapunov(a, diffusion_matrix(p));
}

LangevinMoments langevin_trajectory(const SystemParams& p, const LangevinSpec& spec) {
    p.validate();
    if (p.gamma_m != 0.0)
        throw RegimeError("langevin_trajectory: white-noise model requires gamma_m = 0");
    const double dt_max = 0.01 / std::max(p.omega_m, p.kappa_c);
    const double dt = spec.dt > 0.0 ? spec.dt : dt_max;
    if (dt > dt_max * (1.0 + 1e-12))
        throw ConfigError("langevin_trajectory: dt must be <= 0.01 / max(omega_m, kappa_c)");
    if (spec.trajectories < 2 || !(spec.duration > 0.0))
        throw ConfigError("langevin_trajectory: need >= 2 trajectories and positive duration");
    const Eigen::Matrix4d a = drift_matrix_qc(p);
    // Marginal is allowed: an undriven undamped block simply stays at rest.
    if (eigen_stable(a).verdict == Verdict::Unstable)
        throw InstabilityError("langevin_trajectory: drift matrix is unstable");

    const long steps = std::lround(spec.duration / dt);
    const Eigen::Matrix4d propagator = Eigen::Matrix4d::Identity() + dt * a;
    const double kick = std::sqrt(0.5 * p.kappa_c * dt);

    std::vector<Eigen::Vector4d> finals(static_cast<std::size_t>(spec.trajectories));
    parallel_for(finals.size(), spec.threads, [&](std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                          static_cast<std::uint32_t>(spec.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal(0.0, 1.0);
        Eigen::Vector4d x = Eigen::Vector4d::Zero();
        for (long s = 0; s < steps; ++s) {
            Eigen::Vector4d next = propagator * x;
            next(2) += kick * normal(rng);
            next(3) += kick * normal(rng);
            x = next;
            if ((s & 1023) == 0 && !(x.allFinite() && x.norm() < 1e8))
                throw InstabilityError("langevin_trajectory: trajectory diverged at step " +
                                       std::to_string(s));
        }
        finals[i] = x;
    });

    // Two-pass moments about the ensemble mean.
    const double n = static_cast<double>(finals.size());
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    for (const auto& x : finals) mean += x;
    mean /= n;
    CovarianceMatrix cov = CovarianceMatrix::Zero();
    for (const auto& x : finals) cov += (x - mean) * (x - mean).transpose();
    cov /= n - 1.0;
    CovarianceMatrix spread = CovarianceMatrix::Zero();
    for (const auto& x : finals) {
        const CovarianceMatrix prod = (x - mean) * (x - mean).transpose();
        spread += (prod - cov).cwiseAbs2();
    }
    const CovarianceMatrix stderr_ = (spread / (n - 1.0)).cwiseSqrt() / std::sqrt(n);
    return {cov, stderr_, spec.trajectories, steps, dt};
}

}  // namespace optobath
