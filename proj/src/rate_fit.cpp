// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/rate_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace fracl1 {

RateFit rate_fit(const std::vector<double>& abscissae,
                 const std::vector<double>& values)
{
    const std::size_t n = abscissae.size();
    if (n < 2 || values.size() != n)
        throw std::invalid_argument(
            "rate_fit: need two equal-length point lists");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(abscissae[i] > 0.0) || !(values[i] > 0.0))
            throw std::invalid_argument("rate_fit: entries must be positive");
        const double lx = std::log(abscissae[i]);
        const double ly = std::log(values[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double nd = static_cast<double>(n);
    const double denom = nd * sxx - sx * sx;
    if (denom == 0.0)
        throw std::invalid_argument("rate_fit: degenerate abscissae");

    RateFit fit;
    fit.slope = (nd * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / nd;
    return fit;
}

} // namespace fracl1
