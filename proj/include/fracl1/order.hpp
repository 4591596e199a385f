// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_ORDER_HPP
#define FRACL1_ORDER_HPP

namespace fracl1 {

// Fractional order alpha in the open interval (0,1) together with the
// derived exponent beta = min(alpha, 1-alpha) that governs the decay of
// the composition kernel. beta never exceeds 1/2.
class FracOrder {
public:
    explicit FracOrder(double alpha);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    // Order of the conjugate weight family (1 - alpha).
    FracOrder complement() const { return FracOrder(1.0 - alpha_); }

private:
    double alpha_;
    double beta_;
};

} // namespace fracl1

#endif
