// quadrature.hpp: globally adaptive Gauss-Kronrod (7/15) and fixed
// Gauss-Legendre panel rules, templated on the integrand's value type so the
// same driver handles real and complex integrands.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <vector>

namespace optobath::quad {

struct Tolerance {
    double abs_tol{1e-10};
    double rel_tol{1e-8};
    int max_subdivisions{4000};
};

template <class T>
struct Result {
    T value{};
    double abs_error{0.0};
    int subdivisions{0};
    bool converged{false};
    // Estimated magnitude of the integral beyond a truncated upper limit.
    double tail_bound{0.0};
};

namespace detail {

inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights on the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T kronrod = kronrod_weights[7] * fc;
    T gauss = gauss_weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const T pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

// Integrate f over [a, b], splitting first at any breakpoints that fall
// strictly inside the interval, then bisecting the worst segment until the
// summed error estimate meets max(abs_tol, rel_tol * |I|).
template <class T = double, class F>
Result<T> integrate(F&& f, double a, double b, std::span<const double> breakpoints = {},
                    const Tolerance& tol = {}) {
    Result<T> out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::vector<double> cuts{a};
    for (double x : breakpoints)
        if (x > a && x < b) cuts.push_back(x);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<detail::Segment<T>> heap;
    T total{};
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto seg = detail::gk15<T>(f, cuts[i], cuts[i + 1]);
        total += seg.value;
        error += seg.error;
        heap.push(seg);
    }

    int splits = 0;
    std::vector<detail::Segment<T>> frozen;  // too narrow to bisect further
    while (error > std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) {
        if (heap.empty() || splits >= tol.max_subdivisions) break;
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() *
                                      std::max(std::abs(worst.a), std::abs(worst.b))) {
            frozen.push_back(worst);
            continue;
        }
        auto left = detail::gk15<T>(f, worst.a, mid);
        auto right = detail::gk15<T>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Re-sum to shed the drift accumulated by incremental updates.
    T resum{};
    double err_sum = 0.0;
    for (; !heap.empty(); heap.pop()) {
        resum += heap.top().value;
        err_sum += heap.top().error;
    }
    for (const auto& s : frozen) {
        resum += s.value;
        err_sum += s.error;
    }
    out.value = sign * resum;
    out.abs_error = err_sum;
    out.subdivisions = splits;
    out.converged = err_sum <= std::max(tol.abs_tol, tol.rel_tol * std::abs(resum));
    return out;
}

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline GaussLegendre gauss_legendre(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Absolute nodes/weights of a composite Gauss-Legendre rule with equal panels.
inline GaussLegendre composite_gauss_legendre(double a, double b, int panels, int order) {
    const GaussLegendre base = gauss_legendre(order);
    GaussLegendre out;
    out.nodes.reserve(static_cast<std::size_t>(panels) * order);
    out.weights.reserve(static_cast<std::size_t>(panels) * order);
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double center = a + (p + 0.5) * width;
        for (int k = 0; k < order; ++k) {
            out.nodes.push_back(center + 0.5 * width * base.nodes[k]);
            out.weights.push_back(0.5 * width * base.weights[k]);
        }
    }
    return out;
}

}  // namespace optobath::quad
