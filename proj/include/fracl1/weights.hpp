// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_WEIGHTS_HPP
#define FRACL1_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "fracl1/order.hpp"

namespace fracl1 {

// Convolution weights b_j(beta) = j^beta - (j-1)^beta, stored with
// values[j-1] == b_j. Positive, strictly decreasing for beta in (0,1),
// and telescoping: sum_{j<=k} b_j == k^beta.
struct WeightSeq {
    double beta;
    std::vector<double> values;
};

// Composition kernel S_m (discrete convolution of the order-alpha and
// order-(1-alpha) weight families), values[m-1] == S_m, together with
// its limit Gamma(1+alpha) * Gamma(2-alpha).
struct KernelS {
    double alpha;
    std::vector<double> values;
    double limit;
};

// b_j(beta) in a cancellation-safe form j^beta * (-expm1(beta*log1p(-1/j))).
// Throws std::domain_error for j < 1 or beta outside (0,1].
double weight(std::int64_t j, double beta);

// b_1..b_n.
WeightSeq weight_sequence(std::int64_t n, double beta);

// S_m = sum_{k=1}^m b_{m-k+1}(alpha) * b_k(1-alpha). O(m).
double kernel_S(std::int64_t m, const FracOrder& order);

// S_1..S_n by direct summation, O(n^2) total.
KernelS kernel_table(std::int64_t n, const FracOrder& order);

} // namespace fracl1

#endif
