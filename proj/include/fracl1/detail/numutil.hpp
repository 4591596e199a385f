// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_DETAIL_NUMUTIL_HPP
#define FRACL1_DETAIL_NUMUTIL_HPP

#include <cmath>

namespace fracl1 {
namespace detail {

// (lo + delta)^p - lo^p without catastrophic cancellation.
// Requires lo >= 0 and delta > 0; p may be negative when lo > 0.
inline double pow_diff(double lo, double delta, double p)
{
    if (lo == 0.0)
        return std::pow(delta, p);
    return std::pow(lo, p) * std::expm1(p * std::log1p(delta / lo));
}

} // namespace detail
} // namespace fracl1

#endif
