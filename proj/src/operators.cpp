// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fracl1/special_functions.hpp"

namespace fracl1 {

namespace {

std::vector<double> forward_differences(const std::vector<double>& samples)
{
    std::vector<double> dy(samples.size() - 1);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        dy[i] = samples[i + 1] - samples[i];
    return dy;
}

} // namespace

GridFunction frac_integral_L1(const GridFunction& y, const FracOrder& order)
{
    const std::int64_t n_steps = y.mesh.n_steps;
    const WeightSeq w = weight_sequence(n_steps, order.alpha());
    const double scale =
        std::pow(y.mesh.h, order.alpha()) / gamma_fn(1.0 + order.alpha());

    std::vector<double> out(static_cast<std::size_t>(n_steps) + 1, 0.0);
    for (std::int64_t n = 1; n <= n_steps; ++n) {
        double sum = 0.0;
        for (std::int64_t i = 0; i < n; ++i)
            sum += w.values[static_cast<std::size_t>(n - i - 1)] *
                   y.samples[static_cast<std::size_t>(i + 1)];
        out[static_cast<std::size_t>(n)] = scale * sum;
    }
    return GridFunction(y.mesh, std::move(out));
}

GridFunction caputo_L1(const GridFunction& y, const FracOrder& order)
{
    const std::int64_t n_steps = y.mesh.n_steps;
    const WeightSeq w = weight_sequence(n_steps, 1.0 - order.alpha());
    const double scale = std::pow(y.mesh.h, -order.alpha()) /
                         gamma_fn(2.0 - order.alpha());
    const std::vector<double> dy = forward_differences(y.samples);

    std::vector<double> out(static_cast<std::size_t>(n_steps) + 1, 0.0);
    for (std::int64_t n = 1; n <= n_steps; ++n) {
        double sum = 0.0;
        for (std::int64_t i = 0; i < n; ++i)
            sum += w.values[static_cast<std::size_t>(n - i - 1)] *
                   dy[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(n)] = scale * sum;
    }
    return GridFunction(y.mesh, std::move(out));
}

double frac_integral_L1_at(const GridFunction& y, const FracOrder& order,
                           std::int64_t n)
{
    if (n < 0 || n > y.mesh.n_steps)
        throw std::out_of_range("frac_integral_L1_at: index out of range");
    if (n == 0)
        return 0.0;
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        sum += weight(n - i, order.alpha()) *
               y.samples[static_cast<std::size_t>(i + 1)];
    return std::pow(y.mesh.h, order.alpha()) / gamma_fn(1.0 + order.alpha()) *
           sum;
}

double caputo_L1_at(const GridFunction& y, const FracOrder& order,
                    std::int64_t n)
{
    if (n < 0 || n > y.mesh.n_steps)
        throw std::out_of_range("caputo_L1_at: index out of range");
    if (n == 0)
        return 0.0;
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        sum += weight(n - i, 1.0 - order.alpha()) *
               (y.samples[static_cast<std::size_t>(i + 1)] -
                y.samples[static_cast<std::size_t>(i)]);
    return std::pow(y.mesh.h, -order.alpha()) /
           gamma_fn(2.0 - order.alpha()) * sum;
}

GridFunction compose_direct(const GridFunction& y, const FracOrder& order)
{
    return frac_integral_L1(caputo_L1(y, order), order);
}

GridFunction compose_kernel(const GridFunction& y, const FracOrder& order)
{
    const std::int64_t n_steps = y.mesh.n_steps;
    const KernelS kernel = kernel_table(n_steps, order);
    const double inv_limit = 1.0 / kernel.limit;
    const std::vector<double> dy = forward_differences(y.samples);

    std::vector<double> out(static_cast<std::size_t>(n_steps) + 1, 0.0);
    for (std::int64_t n = 1; n <= n_steps; ++n) {
        double sum = 0.0;
        for (std::int64_t j = 0; j < n; ++j)
            sum += kernel.values[static_cast<std::size_t>(n - j - 1)] *
                   dy[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(n)] = inv_limit * sum;
    }
    return GridFunction(y.mesh, std::move(out));
}

double residue(const GridFunction& y, const FracOrder& order, std::int64_t n)
{
    if (n < 1 || n > y.mesh.n_steps)
        throw std::out_of_range("residue: index out of range");
    const GridFunction composed = compose_kernel(y, order);
    return std::fabs(composed.samples[static_cast<std::size_t>(n)] -
                     y.samples[static_cast<std::size_t>(n)] + y.samples[0]);
}

} // namespace fracl1
