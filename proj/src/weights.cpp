// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "fracl1/special_functions.hpp"

namespace fracl1 {

double weight(std::int64_t j, double beta)
{
    if (j < 1)
        throw std::domain_error("weight: j must be >= 1");
    if (!(beta > 0.0) || beta > 1.0)
        throw std::domain_error("weight: beta must lie in (0,1]");
    if (j == 1 || beta == 1.0)
        return 1.0;
    // j^beta - (j-1)^beta; the naive difference loses all digits once
    // j^beta ~ 1e13 * (difference), so factor out j^beta.
    const double x = static_cast<double>(j);
    return std::pow(x, beta) * (-std::expm1(beta * std::log1p(-1.0 / x)));
}

WeightSeq weight_sequence(std::int64_t n, double beta)
{
    if (n < 1)
        throw std::domain_error("weight_sequence: n must be >= 1");
    WeightSeq seq;
    seq.beta = beta;
    seq.values.resize(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j)
        seq.values[static_cast<std::size_t>(j - 1)] = weight(j, beta);
    return seq;
}

double kernel_S(std::int64_t m, const FracOrder& order)
{
    if (m < 1)
        throw std::domain_error("kernel_S: m must be >= 1");
    const WeightSeq wa = weight_sequence(m, order.alpha());
    const WeightSeq wb = weight_sequence(m, 1.0 - order.alpha());
    double sum = 0.0;
    for (std::int64_t k = 1; k <= m; ++k)
        sum += wa.values[static_cast<std::size_t>(m - k)] *
               wb.values[static_cast<std::size_t>(k - 1)];
    return sum;
}

KernelS kernel_table(std::int64_t n, const FracOrder& order)
{
    if (n < 1)
        throw std::domain_error("kernel_table: n must be >= 1");
    const WeightSeq wa = weight_sequence(n, order.alpha());
    const WeightSeq wb = weight_sequence(n, 1.0 - order.alpha());
    KernelS kernel;
    kernel.alpha = order.alpha();
    kernel.limit =
        gamma_fn(1.0 + order.alpha()) * gamma_fn(2.0 - order.alpha());
    kernel.values.resize(static_cast<std::size_t>(n));
    for (std::int64_t m = 1; m <= n; ++m) {
        double sum = 0.0;
        for (std::int64_t k = 1; k <= m; ++k)
            sum += wa.values[static_cast<std::size_t>(m - k)] *
                   wb.values[static_cast<std::size_t>(k - 1)];
        kernel.values[static_cast<std::size_t>(m - 1)] = sum;
    }
    return kernel;
}

} // namespace fracl1
