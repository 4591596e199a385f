// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_ANALYTIC_HPP
#define FRACL1_ANALYTIC_HPP

#include <functional>

#include "fracl1/order.hpp"
#include "fracl1/quadrature.hpp"

namespace fracl1 {

// Exact fractional integral of t^p:
// Gamma(p+1)/Gamma(p+1+alpha) * t^{p+alpha}, p >= 0.
double exact_frac_integral_monomial(double p, const FracOrder& order, double t);

// Exact fractional derivative (of Caputo type) of t^p:
// Gamma(p+1)/Gamma(p+1-alpha) * t^{p-alpha}, p >= 1; p == 0 gives 0.
double exact_caputo_monomial(double p, const FracOrder& order, double t);

// Fractional integral of a continuous y at time t > 0, computed through
// the substitution s = t*(1 - v^{1/alpha}) which makes the kernel factor
// constant:
//   I y(t) = t^alpha / Gamma(1+alpha) * int_0^1 y(t*(1 - v^{1/alpha})) dv.
double frac_integral_quadrature(const std::function<double(double)>& y,
                                const FracOrder& order, double t,
                                const QuadratureSpec& spec);

// Fractional derivative of Caputo type as the order-(1-alpha) fractional
// integral of y'.
double caputo_quadrature(const std::function<double(double)>& y_prime,
                         const FracOrder& order, double t,
                         const QuadratureSpec& spec);

// Leading coefficient -zeta(alpha-1)/Gamma(2-alpha) of the second-order
// remainder of the L1 derivative per unit y''; positive on (0,1).
double remainder_constant_R(const FracOrder& order);

} // namespace fracl1

#endif
