#include "optobath/stability.hpp"

#include "optobath/parallel.hpp"

#include <cmath>
#include <numbers>

namespace optobath {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "stable";
        case Verdict::Unstable: return "unstable";
        case Verdict::Marginal: return "marginal";
    }
    return "unknown";
}

DriftMatrix4 drift_matrix_qc(const SystemParams& p) {
    const double h = 0.5 * p.kappa_c;
    const double g = 2.0 * p.g_c;
    DriftMatrix4 a;
    a << 0.0, p.omega_m, 0.0, 0.0,
         -p.omega_m, -p.gamma_m, g, 0.0,
         0.0, 0.0, -h, -p.delta_c,
         g, 0.0, p.delta_c, -h;
    return a;
}

DriftMatrix6 drift_matrix_full(const SystemParams& p) {
    DriftMatrix6 a = DriftMatrix6::Zero();
    a.topLeftCorner<4, 4>() = drift_matrix_qc(p);
    a(1, 4) = 2.0 * p.g_a;
    a(4, 5) = -p.delta_a;
    a(5, 0) = 2.0 * p.g_a;
    a(5, 4) = p.delta_a;
    return a;
}

RouthHurwitz routh_hurwitz_qc(const SystemParams& p) {
    if (!(p.delta_c < 0.0))
        throw RegimeError("routh_hurwitz_qc: criterion stated for red detuning Delta_c < 0");
    const double value = 4.0 * p.g_c * p.g_c * p.delta_c + p.cooling_detuning_norm() * p.omega_m;
    Verdict v = value > 0.0 ? Verdict::Stable : Verdict::Unstable;
    if (std::abs(value) <= 1e-14 * p.cooling_detuning_norm() * p.omega_m) v = Verdict::Marginal;
    return {value, v};
}

bool full_criteria_applies(const SystemParams& p) {
    const double optimal = optimal_detuning(p.kappa_c);
    return p.gamma_m == 0.0 && std::abs(p.delta_c - optimal) <= 1e-9 * std::abs(optimal);
}

FullCriteria full_criteria(const SystemParams& p) {
    const double optimal = optimal_detuning(p.kappa_c);
    if (std::abs(p.delta_c - optimal) > 1e-9 * std::abs(optimal))
        throw RegimeError("full_criteria: closed form holds only at -Delta_c = sqrt(3) kappa_c / 2");
    constexpr double two_root3 = 2.0 * std::numbers::sqrt3;
    const double gc2 = p.g_c * p.g_c;
    const double ga2 = p.g_a * p.g_a;
    FullCriteria c;
    c.s1 = p.omega_m * p.kappa_c - two_root3 * gc2;
    c.s2 = -p.delta_a;
    c.s3 = two_root3 * p.delta_a * gc2 - 4.0 * ga2 * p.kappa_c - p.delta_a * p.kappa_c * p.omega_m;
    c.verdict = (c.s1 > 0.0 && c.s2 > 0.0 && c.s3 > 0.0) ? Verdict::Stable : Verdict::Unstable;
    return c;
}

bool StabilityReport::disagrees() const {
    auto differ = [](Verdict analytic, Verdict eig) {
        return eig != Verdict::Marginal && analytic != Verdict::Marginal && analytic != eig;
    };
    if (criteria && differ(criteria->verdict, eig_stable)) return true;
    if (routh_hurwitz && differ(routh_hurwitz->verdict, eig_stable_qc)) return true;
    return false;
}

StabilityReport analyze_stability(const SystemParams& p) {
    p.validate();
    StabilityReport r;
    if (p.delta_c < 0.0) r.routh_hurwitz = routh_hurwitz_qc(p);
    if (full_criteria_applies(p)) r.criteria = full_criteria(p);
    const EigenVerdict full = eigen_stable(drift_matrix_full(p));
    const EigenVerdict qc = eigen_stable(drift_matrix_qc(p));
    r.eig_stable = full.verdict;
    r.spectral_abscissa = full.spectral_abscissa;
    r.eig_stable_qc = qc.verdict;
    r.spectral_abscissa_qc = qc.spectral_abscissa;
    return r;
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
    if (name == "g_c" || name == "gc") return SweepVariable::g_c;
    if (name == "g_a" || name == "ga") return SweepVariable::g_a;
    if (name == "delta_a" || name == "da") return SweepVariable::delta_a;
    return std::nullopt;
}

std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::g_c: return "g_c";
        case SweepVariable::g_a: return "g_a";
        case SweepVariable::delta_a: return "delta_a";
    }
    return "unknown";
}

namespace {

void assign(SystemParams& p, SweepVariable v, double value) {
    switch (v) {
        case SweepVariable::g_c: p.g_c = value; break;
        case SweepVariable::g_a: p.g_a = value; break;
        case SweepVariable::delta_a: p.delta_a = value; break;
    }
}

double axis_value(const Axis& a, int i) {
    return a.min + (a.max - a.min) * static_cast<double>(i) / (a.count - 1);
}

void check_axis(const Axis& a) {
    if (a.count < 2) throw ConfigError("sweep axis count must be >= 2");
    if (!(a.min < a.max)) throw ConfigError("sweep axis requires min < max");
}

}  // namespace

std::size_t StabilityMap::disagreements() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.report.disagrees() ? 1 : 0;
    return n;
}

StabilityMap stability_map(const Axis& x, const Axis& y, const SystemParams& p, unsigned threads) {
    check_axis(x);
    check_axis(y);
    if (x.variable == y.variable) throw ConfigError("stability map axes must differ");
    p.validate();
    StabilityMap map{x, y, {}};
    const std::size_t n = static_cast<std::size_t>(x.count) * static_cast<std::size_t>(y.count);
    map.cells.resize(n);
    parallel_for(n, threads, [&](std::size_t k) {
        const int iy = static_cast<int>(k / static_cast<std::size_t>(x.count));
        const int ix = static_cast<int>(k % static_cast<std::size_t>(x.count));
        StabilityCell& cell = map.cells[k];
        cell.x = axis_value(x, ix);
        cell.y = axis_value(y, iy);
        cell.params = p;
        assign(cell.params, x.variable, cell.x);
        assign(cell.params, y.variable, cell.y);
        cell.report = analyze_stability(cell.params);
    });
    return map;
}

}  // namespace optobath
