#include "doctest.h"

#include "optobath/bath_spectrum.hpp"
#include "optobath/correlation_oracle.hpp"
#include "optobath/errors.hpp"
#include "optobath/linear_response.hpp"
#include "optobath/photon_rates.hpp"

#include <cmath>
#include <numbers>

using namespace optobath;

namespace {

SystemParams laser_limit() {
    SystemParams p = presets::fig1_cooled();
    p.gamma_m = 0.0;
    return p;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("c_qq_thermal") {
    CHECK(c_qq_thermal(0.4, laser_limit()).value == Complex(0.0, 0.0));
    const SystemParams p = presets::fig1_cooled();
    const CorrelationValue c = c_qq_thermal(0.0, p);
    CHECK(c.value.imag() == 0.0);
    CHECK(c.value.real() > 0.0);

    SUBCASE("t = 0 matches the thermal share of s_qq") {
        // (1/2pi) int (S_F(w) + S_F(-w)) dw with S_F from the bath term alone
        auto f = [&](double w) {
            const double j = ohmic_j(w, p) * std::norm(chi_q(w, p));
            return j * (1.0 + 2.0 / std::expm1(w * p.beta)) / std::numbers::pi;
        };
        const auto ref = quad::integrate<double>(f, 0.0, spectral_upper_limit(p), spectral_breakpoints(p));
        CHECK(c.value.real() == doctest::Approx(ref.value).epsilon(1e-2));
    }
}

TEST_CASE("c_qq_optical") {
    SystemParams bare = presets::fig1_bare();
    CHECK(c_qq_optical(0.3, bare).value == Complex(0.0, 0.0));
    const SystemParams p = presets::fig1_cooled();
    const Complex c0 = c_qq_optical(0.0, p).value;
    CHECK(c0.real() > 0.0);
    CHECK(std::abs(c0.imag()) <= 1e-12 * c0.real());
    CHECK(c_qq_optical(0.1, p).value.imag() < 0.0);
}

TEST_CASE("c_qq_total") {
    const SystemParams p = laser_limit();
    SUBCASE("sum of contributions") {
        const SystemParams q = presets::fig1_cooled();
        const Complex sum = c_qq_thermal(0.5, q).value + c_qq_optical(0.5, q).value;
        CHECK(rel(c_qq_total(0.5, q).value, sum) < 1e-12);
    }
    SUBCASE("representation equivalence") {
        for (const SystemParams& q : {p, presets::fig1_cooled()})
            for (double t : {0.0, 0.5, 1.0, 5.0})
                CHECK(rel(c_qq_representation(t, q).value, c_qq_total(t, q).value) < 1e-3);
    }
    SUBCASE("t = 0 against an explicit coth integral") {
        auto f = [&](double w) {
            const double b = beta_eff(w, p);
            return j_eff(w, p) / std::tanh(0.5 * w * b) / std::numbers::pi;
        };
        const auto ref = quad::integrate<double>(f, 0.0, spectral_upper_limit(p), spectral_breakpoints(p));
        CHECK(rel(c_qq_total(0.0, p).value, Complex(ref.value, 0.0)) < 1e-3);
    }
    SUBCASE("decays at long times") {
        const double c0 = std::abs(c_qq_total(0.0, p).value);
        CHECK(std::abs(c_qq_total(100.0 / p.kappa_c, p).value) < 1e-3 * c0);
    }
    SUBCASE("conjugate symmetry") {
        const Complex a = c_qq_total(0.7, p).value, b = c_qq_total(-0.7, p).value;
        CHECK(rel(b, std::conj(a)) < 1e-14);
    }
}

TEST_CASE("correlation_series") {
    const SystemParams p = laser_limit();
    const std::vector<double> times{0.0, 0.25, 1.0};
    const CorrelationSeries s = correlation_series(times, p, Contribution::total, {}, 2);
    REQUIRE(s.values.size() == 3);
    CHECK(s.tag == Contribution::total);
    for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(s.values[i] == c_qq_total(times[i], p).value);
    CHECK(to_string(Contribution::optical) == "optical");
}

TEST_CASE("spectrum consistency: DFT of sampled C_qq reproduces s_qq") {
    const SystemParams p = laser_limit();
    const double dt = 0.01;
    const int count = 20001;  // t in [0, 200]
    const std::vector<Complex> c = sample_correlation_uniform(p, dt, count, 50.0);
    CHECK(rel(c[0], c_qq_total(0.0, p).value) < 1e-6);
    CHECK(rel(c[150], c_qq_total(1.5, p).value) < 1e-6);
    double worst = 0.0;
    for (double w = 0.05; w <= 2.0 + 1e-12; w += 0.05) {
        const double s = spectrum_from_series(c, dt, w);
        worst = std::max(worst, std::abs(s / s_qq(w, p) - 1.0));
        worst = std::max(worst, std::abs(spectrum_from_series(c, dt, -w) / s_qq(-w, p) - 1.0));
    }
    CHECK(worst < 0.01);
}

TEST_CASE("spectral_position_variance") {
    const SystemParams p = laser_limit();
    const auto v = spectral_position_variance(p);
    CHECK(v.value > 0.0);
    CHECK(v.converged);
    // <q^2> = C_qq(0)
    CHECK(v.value == doctest::Approx(c_qq_total(0.0, p).value.real()).epsilon(1e-6));
}

TEST_CASE("lyapunov_covariance") {
    SUBCASE("uncoupled vacuum cavity") {
        SystemParams p = laser_limit();
        p.g_c = 0.0;
        // mechanics undamped: no steady state
        CHECK_THROWS_AS(lyapunov_covariance(p), InstabilityError);
        const Eigen::Matrix2d a = drift_matrix_qc(p).bottomRightCorner<2, 2>();
        const Eigen::Matrix2d d = diffusion_matrix(p).bottomRightCorner<2, 2>();
        const Eigen::Matrix2d v = solve_lyapunov(a, d);
        CHECK(v(0, 0) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(v(1, 1) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(std::abs(v(0, 1)) < 1e-14);
    }
    SUBCASE("cooled resonator") {
        const SystemParams p = laser_limit();
        const CovarianceMatrix v = lyapunov_covariance(p);
        CHECK((v - v.transpose()).norm() == 0.0);
        CHECK((v.diagonal().array() > 0.0).all());
        CHECK(lyapunov_residual(drift_matrix_qc(p), v, diffusion_matrix(p)) < 1e-10);
        const double spectral = spectral_position_variance(p).value / (2.0 * p.zpf_squared());
        CHECK(v(0, 0) == doctest::Approx(spectral).epsilon(1e-3));
    }
    SystemParams warm = presets::fig1_cooled();
    CHECK_THROWS_AS(lyapunov_covariance(warm), RegimeError);
    SystemParams hot = laser_limit();
    hot.g_c = 0.7;
    CHECK_THROWS_AS(lyapunov_covariance(hot), InstabilityError);
}

TEST_CASE("langevin_trajectory") {
    const SystemParams p = laser_limit();
    LangevinSpec spec;
    spec.trajectories = 200;
    spec.duration = 60.0;
    spec.threads = 2;
    const LangevinMoments a = langevin_trajectory(p, spec);
    CHECK(a.dt == doctest::Approx(0.01 / p.kappa_c));
    const CovarianceMatrix v = lyapunov_covariance(p);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(a.covariance(i, i) - v(i, i)) <= 4.0 * a.standard_error(i, i));

    SUBCASE("fixed seed is bit-reproducible, independent of threads") {
        spec.threads = 1;
        const LangevinMoments b = langevin_trajectory(p, spec);
        CHECK((a.covariance.array() == b.covariance.array()).all());
        spec.seed += 1;
        const LangevinMoments c = langevin_trajectory(p, spec);
        CHECK((a.covariance.array() != c.covariance.array()).any());
    }
    SUBCASE("optical vacuum") {
        SystemParams q = p;
        q.g_c = 0.0;
        LangevinSpec s = spec;
        s.duration = 20.0;
        // undamped mechanics: only the optical block is meaningful here
        const LangevinMoments m = langevin_trajectory(q, s);
        CHECK(std::abs(m.covariance(2, 2) - 0.5) <= 4.0 * m.standard_error(2, 2));
        CHECK(std::abs(m.covariance(3, 3) - 0.5) <= 4.0 * m.standard_error(3, 3));
    }
    SystemParams warm = presets::fig1_cooled();
    CHECK_THROWS_AS(langevin_trajectory(warm, spec), RegimeError);
    LangevinSpec coarse = spec;
    coarse.dt = 0.1;
    CHECK_THROWS(langevin_trajectory(p, coarse));
}
