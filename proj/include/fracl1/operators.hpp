// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_OPERATORS_HPP
#define FRACL1_OPERATORS_HPP

#include <cstdint>

#include "fracl1/mesh.hpp"
#include "fracl1/order.hpp"
#include "fracl1/weights.hpp"

namespace fracl1 {

// Discrete fractional integral (rectangle rule on the kernel),
//   out_n = h^alpha / Gamma(1+alpha) * sum_{i=0}^{n-1} b_{n-i}(alpha) y_{i+1},
// for n = 1..n_steps; index 0 is 0 (empty sum).
GridFunction frac_integral_L1(const GridFunction& y, const FracOrder& order);

// L1 discretization of the Caputo derivative,
//   out_n = h^{-alpha} / Gamma(2-alpha)
//           * sum_{i=0}^{n-1} b_{n-i}(1-alpha) (y_{i+1} - y_i),
// index 0 is 0.
GridFunction caputo_L1(const GridFunction& y, const FracOrder& order);

// Value of frac_integral_L1 / caputo_L1 at a single index n, O(n).
double frac_integral_L1_at(const GridFunction& y, const FracOrder& order,
                           std::int64_t n);
double caputo_L1_at(const GridFunction& y, const FracOrder& order,
                    std::int64_t n);

// The composed operator applied literally: frac_integral_L1 after
// caputo_L1. Retained as an independently computed reference for
// compose_kernel.
GridFunction compose_direct(const GridFunction& y, const FracOrder& order);

// The same composition after interchanging the two convolution sums:
//   out_n = 1/(Gamma(1+alpha)Gamma(2-alpha))
//           * sum_{j=0}^{n-1} S_{n-j} (y_{j+1} - y_j).
GridFunction compose_kernel(const GridFunction& y, const FracOrder& order);

// Defect of the discrete fundamental-theorem analogue at index n:
//   rho = |(compose y)_n - y_n + y_0|.
double residue(const GridFunction& y, const FracOrder& order, std::int64_t n);

} // namespace fracl1

#endif
