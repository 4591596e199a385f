// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACL1_EXPERIMENTS_HPP
#define FRACL1_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fracl1/order.hpp"
#include "fracl1/quadrature.hpp"

namespace fracl1 {

// A named test function with optional closed-form references. Missing
// members are empty std::functions (the kink |t - 1/2| has no usable
// derivative, so only its samples ever enter a computation).
struct TestFunction {
    std::string name;
    std::function<double(double)> evaluator;
    std::function<double(double)> derivative;
    std::function<double(double, double)> exact_caputo;    // (alpha, t)
    std::function<double(double, double)> exact_integral;  // (alpha, t)
};

// Registry: "cubic", "sine", "kink", "monomial:P" (P real >= 0,
// monomial:0 is the constant 1). Throws std::invalid_argument otherwise.
TestFunction make_test_function(const std::string& name);

struct ConvergenceReport {
    std::vector<double> abscissae;  // h or m
    std::vector<double> errors;
    double slope = 0.0;
    double intercept = 0.0;
    bool degenerate = false;  // no usable fit: errors at rounding level
                              // throughout, or fewer than two points
    std::vector<std::pair<std::string, std::string>> config;
};

// Residue rho at the final index versus h = t_final/n over n_list.
ConvergenceReport residue_sweep(const TestFunction& func,
                                const FracOrder& order, double t_final,
                                const std::vector<std::int64_t>& n_list);

// Deviation of the rescaled kernel integral from its limit versus m.
ConvergenceReport em_sweep(const FracOrder& order,
                           const std::vector<std::int64_t>& m_list);
ConvergenceReport em_sweep(const FracOrder& order,
                           const std::vector<std::int64_t>& m_list,
                           const QuadratureSpec& spec);

enum class OperatorKind { integral, derivative };

// |discrete operator at t_final - exact reference| versus h.
ConvergenceReport operator_rate_sweep(const TestFunction& func,
                                      const FracOrder& order, double t_final,
                                      const std::vector<std::int64_t>& n_list,
                                      OperatorKind which);

// Header "abscissa,error", one row per point in scientific notation with
// 17 significant digits, then '#'-prefixed metadata rows (config, fitted
// slope). Byte-deterministic for identical reports.
void emit_csv(const ConvergenceReport& report, std::ostream& os);
void emit_csv(const ConvergenceReport& report, const std::string& path);

} // namespace fracl1

#endif
