// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_QUADRATURE_HPP
#define FRACL1_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace fracl1 {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    int subdivisions;
};

// Raised when the requested tolerance cannot be met; carries the best
// value obtained and the achieved error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double achieved,
                    double requested)
        : std::runtime_error(what),
          value(value),
          achieved_error(achieved),
          requested_tol(requested)
    {
    }

    double value;
    double achieved_error;
    double requested_tol;
};

// Globally adaptive Gauss-Kronrod 7-15 integration of f over [a, b].
// Worst-panel-first bisection, deterministic for a given integrand.
// Stops once the summed error estimate drops below
// max(abs_tol, rel_tol * |integral|); throws QuadratureError otherwise.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec);

} // namespace fracl1

#endif
