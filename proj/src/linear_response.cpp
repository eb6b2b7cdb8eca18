#include "optobath/linear_response.hpp"

#include "optobath/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace optobath {

namespace {

Complex inverse_bare(double omega, const SystemParams& p) {
    return {p.omega_m * p.omega_m - omega * omega, -omega * p.gamma_m};
}

}  // namespace

Complex chi_q0(double omega, const SystemParams& p) {
    const Complex inv = inverse_bare(omega, p);
    if (std::abs(inv) < std::numeric_limits<double>::min())
        throw PoleError("chi_q0: undamped mechanical pole", omega);
    return 1.0 / inv;
}

Complex self_energy(double omega, const SystemParams& p) {
    const double half = 0.5 * p.kappa_c;
    const Complex a{p.delta_c + omega, half};
    const Complex b{p.delta_c - omega, -half};
    return p.cooling_strength() * (1.0 / a + 1.0 / b);
}

Complex chi_q(double omega, const SystemParams& p) {
    const Complex inv = inverse_bare(omega, p) + self_energy(omega, p);
    if (std::abs(inv) < std::numeric_limits<double>::min())
        throw PoleError("chi_q: undamped dressed pole", omega);
    return 1.0 / inv;
}

double lorentzian(double omega, const SystemParams& p) {
    const double x = omega + p.delta_c;
    const double h = 0.5 * p.kappa_c;
    return (p.kappa_c / (2.0 * std::numbers::pi)) / (x * x + h * h);
}

double lorentzian_asymmetry(double omega, const SystemParams& p) {
    const double h2 = 0.25 * p.kappa_c * p.kappa_c;
    const double plus = (omega + p.delta_c) * (omega + p.delta_c) + h2;
    const double minus = (omega - p.delta_c) * (omega - p.delta_c) + h2;
    return (p.kappa_c / (2.0 * std::numbers::pi)) * (-4.0 * omega * p.delta_c) / (plus * minus);
}

Eigen::ArrayXcd chi_q(const Eigen::ArrayXd& omega, const SystemParams& p) {
    return omega.unaryExpr([&](double w) { return chi_q(w, p); });
}

Eigen::ArrayXd lorentzian(const Eigen::ArrayXd& omega, const SystemParams& p) {
    return omega.unaryExpr([&](double w) { return lorentzian(w, p); });
}

Resonance dressed_resonance(const SystemParams& p) {
    auto response = [&](double w) {
        const Complex inv = inverse_bare(w, p) + self_energy(w, p);
        const double n = std::norm(inv);
        return n > 0.0 ? 1.0 / n : std::numeric_limits<double>::infinity();
    };

    // coarse log scan, then golden-section refinement around the best sample
    const double lo = 1e-4 * p.omega_m;
    const double hi = 10.0 * std::max({p.omega_m, p.kappa_c, std::abs(p.delta_c)});
    constexpr int n = 2000;
    const double ratio = std::pow(hi / lo, 1.0 / (n - 1));
    int best = 0;
    double best_val = -1.0;
    double w = lo;
    for (int i = 0; i < n; ++i, w *= ratio) {
        const double v = response(w);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = lo * std::pow(ratio, std::max(best - 1, 0));
    double b = lo * std::pow(ratio, std::min(best + 1, n - 1));
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    for (int it = 0; it < 200 && (b - a) > 1e-15 * b; ++it) {
        if (response(c) > response(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - g * (b - a);
        d = a + g * (b - a);
    }
    const double peak = 0.5 * (a + b);
    const double peak_val = response(peak);

    // half maximum by bisection on the upper side
    double inner = peak, outer = peak;
    double step = std::max(1e-12, 1e-9 * peak);
    while (response(outer) > 0.5 * peak_val && outer < hi) {
        inner = outer;
        outer = peak + step;
        step *= 2.0;
    }
    for (int it = 0; it < 200 && (outer - inner) > 1e-15 * outer; ++it) {
        const double mid = 0.5 * (inner + outer);
        (response(mid) > 0.5 * peak_val ? inner : outer) = mid;
    }
    return {peak, std::max(outer - peak, 1e-15)};
}

}  // namespace optobath
