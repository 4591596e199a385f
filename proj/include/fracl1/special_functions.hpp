// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_SPECIAL_FUNCTIONS_HPP
#define FRACL1_SPECIAL_FUNCTIONS_HPP

namespace fracl1 {

// sin(pi*x) with argument reduction; exactly zero at integer x.
double sin_pi(double x);

// Gamma function via a 13-term Lanczos rational approximation, extended
// to negative non-integer arguments by reflection. Relative accuracy
// better than 1e-13 on the ranges used here. Throws std::domain_error
// at poles (non-positive integers) and NaN.
double gamma_fn(double x);

// Dirichlet eta(s) = sum (-1)^{k} (k+1)^{-s}, accelerated with the
// Cohen-Rodriguez Villegas-Zagier Chebyshev scheme. Valid for s > 0.
double dirichlet_eta_accelerated(double s);

// Factor 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) relating zeta(s) to
// zeta(1-s). Public so that consistency tests can reuse the exact
// production code path.
double zeta_reflection_factor(double s);

// Riemann zeta for real s != 1. Direct accelerated eta series for
// s >= 1/2; reflection onto (1/2, inf) otherwise. zeta(0) = -1/2 is
// returned directly (the reflection formula degenerates to 0 * pole
// there; -1/2 is its limit value).
double zeta_fn(double s);

} // namespace fracl1

#endif
