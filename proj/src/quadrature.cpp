// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace fracl1 {

namespace {

// Gauss-Kronrod 7-15 pair. Kronrod abscissae (positive half) and
// weights; the embedded 7-point Gauss rule uses the odd-index nodes.
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0,
};

constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992,
};

constexpr double kWg[4] = {
    0.1294849661688696932706114,
    0.2797053914892766679014678,
    0.3818300505051189449503698,
    0.4179591836734693877551020,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    std::int64_t seq;
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const
    {
        if (x.error != y.error)
            return x.error < y.error;
        return x.seq < y.seq;  // deterministic tie break
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b, std::int64_t seq)
{
    const double c = 0.5 * (a + b);
    const double hh = 0.5 * (b - a);

    double fv1[7];
    double fv2[7];
    const double fc = f(c);

    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = hh * kXgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const double fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        if (j % 2 == 1)
            resg += kWg[j / 2] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }

    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] *
                  (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double ahh = std::fabs(hh);
    resabs *= ahh;
    resasc *= ahh;

    double err = std::fabs(resk - resg) * ahh;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    const double underflow = std::numeric_limits<double>::min();
    if (resabs > underflow / eps50)
        err = std::max(err, eps50 * resabs);

    return Panel{a, b, resk * hh, err, seq};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec)
{
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) ||
        spec.max_subdivisions < 1)
        throw std::invalid_argument("integrate_adaptive: invalid spec");
    if (a == b)
        return QuadratureResult{0.0, 0.0, 0};

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> panels;
    std::int64_t seq = 0;

    Panel first = evaluate_panel(f, a, b, seq++);
    double total_value = first.value;
    double total_error = first.error;
    panels.push(first);

    int subdivisions = 0;
    auto tolerance = [&](double value) {
        return std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    };

    while (total_error > tolerance(total_value) &&
           subdivisions < spec.max_subdivisions) {
        Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            break;  // interval at floating-point resolution
        panels.pop();
        Panel left = evaluate_panel(f, worst.a, mid, seq++);
        Panel right = evaluate_panel(f, mid, worst.b, seq++);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    if (total_error > tolerance(total_value))
        throw QuadratureError(
            "integrate_adaptive: tolerance not met (achieved error " +
                std::to_string(total_error) + ", requested " +
                std::to_string(tolerance(total_value)) + ")",
            total_value, total_error, tolerance(total_value));

    return QuadratureResult{total_value, total_error, subdivisions};
}

} // namespace fracl1
