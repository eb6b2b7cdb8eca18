#include "doctest.h"

#include "optobath/bath_spectrum.hpp"
#include "optobath/errors.hpp"
#include "optobath/photon_rates.hpp"

#include <cmath>

using namespace optobath;

namespace {

SystemParams cooled() { return presets::fig1_cooled(); }

}  // namespace

TEST_CASE("rotating frame") { CHECK(rotating_frame_frequency(5.0, 4.75) == 0.25); }

TEST_CASE("s_qq") {
    const SystemParams p = cooled();
    CHECK(s_qq(0.3, p) / s_qq(-0.3, p) == doctest::Approx(std::exp(0.3 * beta_eff(0.3, p))).epsilon(1e-12));
    CHECK_THROWS_AS(s_qq(0.0, p), RegimeError);

    SUBCASE("cold bare bath does not emit") {
        SystemParams q = presets::fig1_bare();
        q.beta = 1e4;
        CHECK(s_qq(-0.5, q) < 1e-300);
        CHECK(s_qq(0.5, q) > 0.0);
    }
}

TEST_CASE("gamma_rates") {
    const SystemParams p = cooled();
    SUBCASE("closed forms") {
        for (double w : {1e-3, 0.1, 0.5, 1.0, 3.0}) {
            const double x = w * beta_eff(w, p);
            const double scale = 4 * p.g_a * p.g_a * p.omega_m * j_eff(w, p);
            const GammaRates g = gamma_rates(w, p);
            CHECK(g.plus == doctest::Approx(scale / std::expm1(x)).epsilon(1e-13));
            CHECK(g.minus == doctest::Approx(scale * std::exp(x) / std::expm1(x)).epsilon(1e-13));
            CHECK(g.minus - g.plus == doctest::Approx(scale).epsilon(1e-9));
            CHECK(g.minus >= g.plus);
            CHECK(g.plus >= 0.0);
        }
    }
    SUBCASE("detailed balance at Omega = 0.5") {
        const GammaRates g = gamma_rates(0.5, p);
        CHECK(std::abs(g.minus / g.plus / std::exp(0.5 * beta_eff(0.5, p)) - 1.0) < 1e-12);
    }
    SUBCASE("two paths through s_qq") {
        const double k = p.g_a * p.g_a / p.zpf_squared();
        for (double w : log_grid(1e-3, 4.0, 100)) {
            const GammaRates g = gamma_rates(w, p);
            CHECK(g.plus == doctest::Approx(k * s_qq(-w, p)).epsilon(1e-12));
            CHECK(g.minus == doctest::Approx(k * s_qq(w, p)).epsilon(1e-12));
        }
    }
    SUBCASE("decoupled probe") {
        SystemParams q = p;
        q.g_a = 0.0;
        const GammaRates g = gamma_rates(0.4, q);
        CHECK(g.plus == 0.0);
        CHECK(g.minus == 0.0);
    }
    CHECK_THROWS_AS(gamma_rates(0.0, p), RegimeError);
}

TEST_CASE("fgr_rates") {
    const SystemParams p = cooled();
    const GammaRates g = gamma_rates(0.3, p);
    const TransitionRates r0 = fgr_rates(0, 0.3, p);
    CHECK(r0.up == g.plus);
    CHECK(r0.down == 0.0);
    const TransitionRates r3 = fgr_rates(3, 0.3, p);
    CHECK(r3.up == 4 * g.plus);
    CHECK(r3.down == 3 * g.minus);
    CHECK_THROWS_AS(fgr_rates(-1, 0.3, p), RegimeError);

    SUBCASE("balance fixed point reproduces the Bose occupation") {
        for (double w : log_grid(1e-3, 4.0, 50)) {
            const GammaRates h = gamma_rates(w, p);
            const double n_fixed = h.plus / (h.minus - h.plus);
            CHECK(n_fixed == doctest::Approx(occupation(w, p).n_bar).epsilon(1e-10));
            const double n = occupation(w, p).n_bar;
            CHECK((n + 1) * h.plus == doctest::Approx(n * h.minus).epsilon(1e-12));
        }
    }
}

TEST_CASE("occupation") {
    SystemParams p = cooled();
    SUBCASE("analytic inversions") {
        // beta_eff is almost flat at low frequency; pick Omega with hbar Omega beta_eff = ln 2
        const double target = std::log(2.0);
        double w = target / beta_eff_low(p);
        for (int i = 0; i < 50; ++i) w = target / beta_eff(w, p);
        CHECK(occupation(w, p).n_bar == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(1.0 / std::expm1(0.1 * 2.838) == doctest::Approx(3.0472).epsilon(1e-4));
        CHECK(occupation(0.1, p).n_bar == doctest::Approx(1.0 / std::expm1(0.1 * beta_eff(0.1, p))));
        // deep Boltzmann tail of a fixed-temperature bath
        CHECK(occupation(1e6, presets::fig1_bare()).n_bar < 1e-40);
    }
    SUBCASE("monotone at constant low-frequency beta") {
        const double b = beta_eff_low(p);
        double prev = INFINITY;
        for (double w : log_grid(1e-3, 4.0, 100)) {
            const double n = thermal_occupation(w, b);
            CHECK(n < prev);
            prev = n;
        }
    }
    SUBCASE("gain regime") {
        p.delta_c = 1.0;
        p.g_c = 0.2;
        const Occupation rej = occupation(0.1, p);
        CHECK(rej.non_equilibrium);
        CHECK(std::isnan(rej.n_bar));
        const Occupation raw = occupation(0.1, p, GainPolicy::Raw);
        CHECK(raw.non_equilibrium);
        CHECK(raw.n_bar < 0.0);
    }
}

TEST_CASE("occupation_with_loss") {
    SystemParams p = cooled();
    SUBCASE("lossless reduction is exact") {
        for (double w : log_grid(1e-3, 4.0, 100)) CHECK(occupation_with_loss(w, p) == occupation(w, p).n_bar);
    }
    SUBCASE("loss lowers occupation") {
        p.kappa_a = 1e-3;
        for (double w : log_grid(1e-3, 4.0, 100)) CHECK(occupation_with_loss(w, p) < occupation(w, p).n_bar);
        p.kappa_a = 1e12;
        CHECK(occupation_with_loss(0.3, p) < 1e-9);
    }
    SUBCASE("kappa_a = Gamma_- - Gamma_+ halves the occupation") {
        const GammaRates g = gamma_rates(0.3, p);
        p.kappa_a = g.minus - g.plus;
        CHECK(occupation_with_loss(0.3, p) == doctest::Approx(g.plus / (2 * (g.minus - g.plus))).epsilon(1e-12));
        CHECK(occupation_with_loss(0.3, p) == doctest::Approx(0.5 * occupation(0.3, p).n_bar).epsilon(1e-12));
    }
    SUBCASE("no steady state in the gain regime") {
        p.delta_c = 1.0;
        p.g_c = 0.2;
        CHECK_THROWS_AS(occupation_with_loss(0.1, p), RegimeError);
        p.kappa_a = 1e-12;
        CHECK_THROWS_AS(occupation_with_loss(0.1, p), RegimeError);
    }
}

TEST_CASE("compute_rate_table") {
    SystemParams p = cooled();
    const Eigen::ArrayXd g = default_grid(p);
    const RateTable t = compute_rate_table(g, p, 3);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        const GammaRates r = gamma_rates(g(i), p);
        CHECK(t.gamma_plus(i) == r.plus);
        CHECK(t.gamma_minus(i) == r.minus);
        CHECK(t.n_bar(i) == occupation(g(i), p).n_bar);
        CHECK(t.n_bar_lossy(i) == t.n_bar(i));
    }
    p.g_a = 0.0;
    const RateTable z = compute_rate_table(g, p);
    CHECK((z.gamma_plus == 0.0).all());
    CHECK((z.gamma_minus == 0.0).all());
    p.g_a = 0.45;
    p.kappa_a = 1e-2;
    const RateTable lossy = compute_rate_table(g, p);
    CHECK((lossy.n_bar_lossy < lossy.n_bar).all());
}
