// stability.hpp: drift matrices of the linearised quadrature dynamics,
// Routh-Hurwitz style criteria and the eigenvalue verdict used as authority.

#pragma once

#include "optobath/errors.hpp"
#include "optobath/units_params.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

namespace optobath {

// State ordering (Q, P, X_c, Y_c[, X_a, Y_a]).
using DriftMatrix4 = Eigen::Matrix<double, 4, 4, Eigen::RowMajor>;
using DriftMatrix6 = Eigen::Matrix<double, 6, 6, Eigen::RowMajor>;

enum class Verdict { Stable, Unstable, Marginal };
std::string_view to_string(Verdict v);

// |spectral abscissa| below this is reported as Marginal.
inline constexpr double marginal_band = 1e-9;

DriftMatrix4 drift_matrix_qc(const SystemParams& p);
DriftMatrix6 drift_matrix_full(const SystemParams& p);

struct EigenVerdict {
    double spectral_abscissa;
    Verdict verdict;
    Eigen::VectorXcd eigenvalues;
};

template <typename Derived>
EigenVerdict eigen_stable(const Eigen::MatrixBase<Derived>& m);

struct RouthHurwitz {
    double value;  // 4 g_c^2 Delta_c + (Delta_c^2 + kappa_c^2/4) omega_m
    Verdict verdict;
};
// Red-detuned cooling pump only (RegimeError for Delta_c >= 0).
RouthHurwitz routh_hurwitz_qc(const SystemParams& p);

struct FullCriteria {
    double s1, s2, s3;
    Verdict verdict;
};
// Closed-form conditions of the 6-mode system at optimal detuning and
// gamma_m = 0 (gamma_m is ignored). RegimeError off optimal detuning.
FullCriteria full_criteria(const SystemParams& p);

// Whether full_criteria's closed form is stated for p (optimal detuning to
// 1e-9 relative, gamma_m = 0).
bool full_criteria_applies(const SystemParams& p);

struct StabilityReport {
    std::optional<RouthHurwitz> routh_hurwitz;  // Delta_c < 0
    std::optional<FullCriteria> criteria;       // optimal detuning, gamma_m = 0
    Verdict eig_stable;                         // authoritative, 6x6 system
    double spectral_abscissa;
    Verdict eig_stable_qc;                      // 4x4 (Q, P, X_c, Y_c) block
    double spectral_abscissa_qc;

    // Analytic verdict for the full system, when the closed form applies.
    std::optional<Verdict> rh_stable() const {
        if (criteria) return criteria->verdict;
        return std::nullopt;
    }
    // Analytic and eigenvalue verdicts differ on a pair that is not marginal.
    bool disagrees() const;
};
StabilityReport analyze_stability(const SystemParams& p);

enum class SweepVariable { g_c, g_a, delta_a };
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);
std::string_view to_string(SweepVariable v);

struct Axis {
    SweepVariable variable;
    double min;
    double max;
    int count;
};

struct StabilityCell {
    double x, y;
    SystemParams params;
    StabilityReport report;
};

struct StabilityMap {
    Axis x_axis, y_axis;
    std::vector<StabilityCell> cells;  // row-major, y outer
    std::size_t disagreements() const;
};

StabilityMap stability_map(const Axis& x, const Axis& y, const SystemParams& p,
                           unsigned threads = 1);

// ---------------------------------------------------------------------------

template <typename Derived>
EigenVerdict eigen_stable(const Eigen::MatrixBase<Derived>& m) {
    using Plain = Eigen::Matrix<double, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
    const Plain a = m;
    if (!a.allFinite()) throw InstabilityError("eigen_stable: matrix has non-finite entries");
    Eigen::EigenSolver<Plain> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw InstabilityError("eigen_stable: eigenvalue solver did not converge");
    EigenVerdict out;
    out.eigenvalues = solver.eigenvalues();
    out.spectral_abscissa = out.eigenvalues.real().maxCoeff();
    if (std::abs(out.spectral_abscissa) < marginal_band) {
        out.verdict = Verdict::Marginal;
    } else {
        out.verdict = out.spectral_abscissa < 0.0 ? Verdict::Stable : Verdict::Unstable;
    }
    return out;
}

}  // namespace optobath
