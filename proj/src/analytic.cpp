// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "fracl1/special_functions.hpp"

namespace fracl1 {

double exact_frac_integral_monomial(double p, const FracOrder& order, double t)
{
    if (!(p >= 0.0))
        throw std::domain_error("exact_frac_integral_monomial: p must be >= 0");
    if (!(t >= 0.0))
        throw std::domain_error("exact_frac_integral_monomial: t must be >= 0");
    if (t == 0.0)
        return 0.0;
    return gamma_fn(p + 1.0) / gamma_fn(p + 1.0 + order.alpha()) *
           std::pow(t, p + order.alpha());
}

double exact_caputo_monomial(double p, const FracOrder& order, double t)
{
    if (p == 0.0)
        return 0.0;
    if (!(p >= 1.0))
        throw std::domain_error(
            "exact_caputo_monomial: p must be >= 1 (or 0 for constants)");
    if (!(t >= 0.0))
        throw std::domain_error("exact_caputo_monomial: t must be >= 0");
    if (t == 0.0)
        return 0.0;
    return gamma_fn(p + 1.0) / gamma_fn(p + 1.0 - order.alpha()) *
           std::pow(t, p - order.alpha());
}

double frac_integral_quadrature(const std::function<double(double)>& y,
                                const FracOrder& order, double t,
                                const QuadratureSpec& spec)
{
    if (!(t > 0.0))
        throw std::domain_error("frac_integral_quadrature: t must be > 0");
    const double alpha = order.alpha();
    const double inv_alpha = 1.0 / alpha;
    auto integrand = [&](double v) {
        return y(t * (1.0 - std::pow(v, inv_alpha)));
    };
    const QuadratureResult r = integrate_adaptive(integrand, 0.0, 1.0, spec);
    return std::pow(t, alpha) / gamma_fn(1.0 + alpha) * r.value;
}

double caputo_quadrature(const std::function<double(double)>& y_prime,
                         const FracOrder& order, double t,
                         const QuadratureSpec& spec)
{
    return frac_integral_quadrature(y_prime, order.complement(), t, spec);
}

double remainder_constant_R(const FracOrder& order)
{
    return -zeta_fn(order.alpha() - 1.0) / gamma_fn(2.0 - order.alpha());
}

} // namespace fracl1
