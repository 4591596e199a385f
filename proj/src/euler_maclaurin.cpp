// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/euler_maclaurin.hpp"

#include <cmath>
#include <stdexcept>

#include "fracl1/detail/numutil.hpp"
#include "fracl1/special_functions.hpp"
#include "fracl1/weights.hpp"

namespace fracl1 {

using detail::pow_diff;

double em_integrand_f(double x, std::int64_t m, const FracOrder& order)
{
    const double md = static_cast<double>(m);
    if (!(x >= 1.0 && x <= md))
        throw std::domain_error("em_integrand_f: x outside [1, m]");
    const double inv = 1.0 / md;
    const double lo_right = (md - x) * inv;  // 1 - y
    const double lo_left = (x - 1.0) * inv;  // y - 1/m
    return pow_diff(lo_right, inv, order.alpha()) *
           pow_diff(lo_left, inv, 1.0 - order.alpha());
}

double em_integrand_fprime(double x, std::int64_t m, const FracOrder& order)
{
    const double md = static_cast<double>(m);
    if (!(x > 1.0 && x < md))
        throw std::domain_error("em_integrand_fprime: x outside (1, m)");
    const double a = order.alpha();
    const double inv = 1.0 / md;
    const double lo_right = (md - x) * inv;
    const double lo_left = (x - 1.0) * inv;
    return -(a * inv) * pow_diff(lo_right, inv, a - 1.0) *
               pow_diff(lo_left, inv, 1.0 - a) +
           (1.0 - a) * inv * pow_diff(lo_right, inv, a) *
               pow_diff(lo_left, inv, -a);
}

double periodized_bernoulli_p1(double x)
{
    const double fl = std::floor(x);
    if (x == fl)
        return 0.0;
    return x - fl - 0.5;
}

double em_integral(std::int64_t m, const FracOrder& order,
                   const QuadratureSpec& spec)
{
    if (m < 2)
        throw std::domain_error("em_integral: m must be >= 2");
    const double md = static_cast<double>(m);
    QuadratureSpec half = spec;
    half.abs_tol = spec.abs_tol / (2.0 * md);

    auto f = [&](double x) { return em_integrand_f(x, m, order); };
    const double mid = std::max(1.0, 0.5 * md);
    const double left = integrate_adaptive(f, 1.0, mid, half).value;
    const double right = integrate_adaptive(f, mid, md, half).value;
    return md * (left + right);
}

double em_endpoint_term(std::int64_t m, const FracOrder& order)
{
    if (m < 1)
        throw std::domain_error("em_endpoint_term: m must be >= 1");
    const double md = static_cast<double>(m);
    return 0.5 * md *
           (em_integrand_f(1.0, m, order) + em_integrand_f(md, m, order));
}

double em_remainder_integral(std::int64_t m, const FracOrder& order,
                             const QuadratureSpec& spec)
{
    if (m < 2)
        throw std::domain_error("em_remainder_integral: m must be >= 2");
    const double md = static_cast<double>(m);
    const double a = order.alpha();
    const double inv = 1.0 / md;
    QuadratureSpec per_interval = spec;
    per_interval.abs_tol = spec.abs_tol / (md * (md - 1.0));

    // f' in terms of the edge distances lo_right = (m-x)/m and
    // lo_left = (x-1)/m, so substituted panels can form them without
    // cancellation near the edges.
    auto fprime_parts = [&](double lo_right, double lo_left) {
        return -(a * inv) * pow_diff(lo_right, inv, a - 1.0) *
                   pow_diff(lo_left, inv, 1.0 - a) +
               (1.0 - a) * inv * pow_diff(lo_right, inv, a) *
                   pow_diff(lo_left, inv, -a);
    };

    // f' has integrable power singularities at both ends of [1, m]:
    // ~ (x-1)^{-alpha} on the first unit interval and ~ (m-x)^{alpha-1}
    // on the last. x = 1 + u^{1/(1-alpha)} resp. x = m - v^{1/alpha}
    // makes the integrands bounded.
    const double p = 1.0 / (1.0 - a);
    const double q = 1.0 / a;
    auto left_sub = [&](double u) {
        const double t = std::pow(u, p);  // x - 1
        return fprime_parts((md - 1.0 - t) * inv, t * inv) * (t - 0.5) * p *
               std::pow(u, p - 1.0);
    };
    auto right_sub = [&](double v) {
        const double s = std::pow(v, q);  // m - x
        return fprime_parts(s * inv, (md - 1.0 - s) * inv) * (0.5 - s) * q *
               std::pow(v, q - 1.0);
    };

    double total = 0.0;
    if (m == 2) {
        // Single unit interval, singular at both ends; split at x = 3/2.
        total += integrate_adaptive(left_sub, 0.0, std::pow(0.5, 1.0 / p),
                                    per_interval)
                     .value;
        total += integrate_adaptive(right_sub, 0.0, std::pow(0.5, 1.0 / q),
                                    per_interval)
                     .value;
    } else {
        total += integrate_adaptive(left_sub, 0.0, 1.0, per_interval).value;
        auto fp = [&](double x) {
            return em_integrand_fprime(x, m, order) *
                   periodized_bernoulli_p1(x);
        };
        for (std::int64_t k = 2; k + 1 < m; ++k)
            total += integrate_adaptive(fp, static_cast<double>(k),
                                        static_cast<double>(k + 1),
                                        per_interval)
                         .value;
        total += integrate_adaptive(right_sub, 0.0, 1.0, per_interval).value;
    }
    return md * total;
}

double em_error(std::int64_t m, const FracOrder& order,
                const QuadratureSpec& spec)
{
    const double limit =
        gamma_fn(1.0 + order.alpha()) * gamma_fn(2.0 - order.alpha());
    return std::fabs(em_integral(m, order, spec) - limit);
}

EMDecomposition em_decompose(std::int64_t m, const FracOrder& order,
                             const QuadratureSpec& spec)
{
    EMDecomposition d;
    d.m = m;
    d.alpha = order.alpha();
    d.integral_term = em_integral(m, order, spec);
    d.endpoint_term = em_endpoint_term(m, order);
    d.remainder_term = em_remainder_integral(m, order, spec);
    d.sum_value = kernel_S(m, order);
    return d;
}

} // namespace fracl1
