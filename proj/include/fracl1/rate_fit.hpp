// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_RATE_FIT_HPP
#define FRACL1_RATE_FIT_HPP

#include <vector>

namespace fracl1 {

struct RateFit {
    double slope;
    double intercept;
};

// Ordinary least squares on (log x, log v). Requires at least two
// points, positive entries, and non-identical abscissae.
RateFit rate_fit(const std::vector<double>& abscissae,
                 const std::vector<double>& values);

} // namespace fracl1

#endif
