// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracl1 {

FracOrder::FracOrder(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("FracOrder: alpha must lie in (0,1)");
    alpha_ = alpha;
    beta_ = std::min(alpha, 1.0 - alpha);
}

} // namespace fracl1
