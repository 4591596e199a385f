// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_EULER_MACLAURIN_HPP
#define FRACL1_EULER_MACLAURIN_HPP

#include <cstdint>

#include "fracl1/order.hpp"
#include "fracl1/quadrature.hpp"

namespace fracl1 {

// Euler-Maclaurin split of the composition kernel S_m:
//   S_m = m * sum_{k=1}^m f(k) = integral_term + endpoint_term + remainder_term,
// where f is the product of consecutive weight differences rescaled to
// x in [1, m].
struct EMDecomposition {
    std::int64_t m;
    double alpha;
    double integral_term;   // m * int_1^m f
    double endpoint_term;   // (m/2) * (f(1) + f(m))
    double remainder_term;  // m * int_1^m f' P1
    double sum_value;       // S_m by direct summation
};

// f(x) = ((1-y+1/m)^alpha - (1-y)^alpha) * (y^{1-alpha} - (y-1/m)^{1-alpha}),
// y = x/m, for x in [1, m]. S_m = m * sum_{k=1}^m f(k).
double em_integrand_f(double x, std::int64_t m, const FracOrder& order);

// Analytic derivative of f, valid on the open interval (1, m).
double em_integrand_fprime(double x, std::int64_t m, const FracOrder& order);

// Sawtooth P1(x) = (x - floor(x)) - 1/2, set to 0 at integers.
double periodized_bernoulli_p1(double x);

// m * int_1^m f(x) dx, adaptive quadrature split at x = m/2 (both halves
// carry a boundary layer of unit width). Converges to
// Gamma(1+alpha)Gamma(2-alpha) at rate O(m^{-beta}). Requires m >= 2.
double em_integral(std::int64_t m, const FracOrder& order,
                   const QuadratureSpec& spec);

// (m/2) * (f(1) + f(m)), closed form.
double em_endpoint_term(std::int64_t m, const FracOrder& order);

// m * int_1^m f'(x) P1(x) dx as a sum of per-unit-interval quadratures so
// the sawtooth jumps land on panel boundaries; the integrable power
// singularity of f' at x = 1 is removed by substitution. Requires m >= 2.
double em_remainder_integral(std::int64_t m, const FracOrder& order,
                             const QuadratureSpec& spec);

// |em_integral(m) - Gamma(1+alpha)Gamma(2-alpha)|.
double em_error(std::int64_t m, const FracOrder& order,
                const QuadratureSpec& spec);

EMDecomposition em_decompose(std::int64_t m, const FracOrder& order,
                             const QuadratureSpec& spec);

} // namespace fracl1

#endif
