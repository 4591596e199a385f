// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracl1/analytic.hpp"
#include "fracl1/euler_maclaurin.hpp"
#include "fracl1/experiments.hpp"
#include "fracl1/mesh.hpp"
#include "fracl1/operators.hpp"
#include "fracl1/rate_fit.hpp"
#include "fracl1/special_functions.hpp"
#include "fracl1/weights.hpp"

namespace py = pybind11;

namespace {

fracl1::GridFunction as_grid(std::vector<double> samples, double h)
{
    if (samples.size() < 2)
        throw std::invalid_argument("samples must hold at least two entries");
    const auto n_steps = static_cast<std::int64_t>(samples.size()) - 1;
    return fracl1::GridFunction(fracl1::UniformMesh(h, n_steps),
                                std::move(samples));
}

py::dict report_to_dict(const fracl1::ConvergenceReport& report)
{
    py::dict out;
    out["abscissae"] = report.abscissae;
    out["errors"] = report.errors;
    out["slope"] = report.slope;
    out["intercept"] = report.intercept;
    out["degenerate"] = report.degenerate;
    py::dict config;
    for (const auto& kv : report.config)
        config[py::str(kv.first)] = kv.second;
    out["config"] = config;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Discrete fractional calculus on uniform meshes (L1 scheme)";
    m.attr("__version__") = "0.1.0";

    m.def("weight", &fracl1::weight, py::arg("j"), py::arg("beta"),
          "Convolution weight b_j(beta) = j^beta - (j-1)^beta");
    m.def(
        "weight_sequence",
        [](std::int64_t n, double beta) {
            return fracl1::weight_sequence(n, beta).values;
        },
        py::arg("n"), py::arg("beta"), "Weights b_1..b_n");
    m.def(
        "kernel_S",
        [](std::int64_t m, double alpha) {
            return fracl1::kernel_S(m, fracl1::FracOrder(alpha));
        },
        py::arg("m"), py::arg("alpha"), "Composition kernel value S_m");
    m.def(
        "kernel_table",
        [](std::int64_t n, double alpha) {
            fracl1::KernelS table =
                fracl1::kernel_table(n, fracl1::FracOrder(alpha));
            return py::make_tuple(table.values, table.limit);
        },
        py::arg("n"), py::arg("alpha"),
        "(S_1..S_n, limit Gamma(1+alpha)*Gamma(2-alpha))");

    m.def(
        "frac_integral",
        [](std::vector<double> samples, double h, double alpha) {
            return fracl1::frac_integral_L1(as_grid(std::move(samples), h),
                                            fracl1::FracOrder(alpha))
                .samples;
        },
        py::arg("samples"), py::arg("h"), py::arg("alpha"),
        "Discrete fractional integral of the sampled function");
    m.def(
        "caputo",
        [](std::vector<double> samples, double h, double alpha) {
            return fracl1::caputo_L1(as_grid(std::move(samples), h),
                                     fracl1::FracOrder(alpha))
                .samples;
        },
        py::arg("samples"), py::arg("h"), py::arg("alpha"),
        "L1 discretization of the Caputo derivative");
    m.def(
        "compose",
        [](std::vector<double> samples, double h, double alpha) {
            return fracl1::compose_kernel(as_grid(std::move(samples), h),
                                          fracl1::FracOrder(alpha))
                .samples;
        },
        py::arg("samples"), py::arg("h"), py::arg("alpha"),
        "Composition (integral after derivative) in kernel form");
    m.def(
        "residue",
        [](std::vector<double> samples, double h, double alpha) {
            fracl1::GridFunction y = as_grid(std::move(samples), h);
            return fracl1::residue(y, fracl1::FracOrder(alpha),
                                   y.mesh.n_steps);
        },
        py::arg("samples"), py::arg("h"), py::arg("alpha"),
        "Residue |(compose y)_n - y_n + y_0| at the final index");

    m.def("gamma", &fracl1::gamma_fn, py::arg("x"));
    m.def("zeta", &fracl1::zeta_fn, py::arg("s"));
    m.def(
        "exact_integral_monomial",
        [](double p, double alpha, double t) {
            return fracl1::exact_frac_integral_monomial(
                p, fracl1::FracOrder(alpha), t);
        },
        py::arg("p"), py::arg("alpha"), py::arg("t"));
    m.def(
        "exact_caputo_monomial",
        [](double p, double alpha, double t) {
            return fracl1::exact_caputo_monomial(p, fracl1::FracOrder(alpha),
                                                 t);
        },
        py::arg("p"), py::arg("alpha"), py::arg("t"));
    m.def(
        "remainder_constant",
        [](double alpha) {
            return fracl1::remainder_constant_R(fracl1::FracOrder(alpha));
        },
        py::arg("alpha"),
        "Leading coefficient -zeta(alpha-1)/Gamma(2-alpha)");

    m.def(
        "em_error",
        [](std::int64_t m, double alpha) {
            return fracl1::em_error(m, fracl1::FracOrder(alpha),
                                    fracl1::QuadratureSpec{});
        },
        py::arg("m"), py::arg("alpha"),
        "Deviation of the rescaled kernel integral from its limit");
    m.def(
        "em_decompose",
        [](std::int64_t m, double alpha) {
            const fracl1::EMDecomposition d = fracl1::em_decompose(
                m, fracl1::FracOrder(alpha), fracl1::QuadratureSpec{});
            py::dict out;
            out["m"] = d.m;
            out["alpha"] = d.alpha;
            out["integral_term"] = d.integral_term;
            out["endpoint_term"] = d.endpoint_term;
            out["remainder_term"] = d.remainder_term;
            out["sum_value"] = d.sum_value;
            return out;
        },
        py::arg("m"), py::arg("alpha"),
        "Euler-Maclaurin split of the kernel sum S_m");

    m.def(
        "rate_fit",
        [](const std::vector<double>& xs, const std::vector<double>& vals) {
            const fracl1::RateFit fit = fracl1::rate_fit(xs, vals);
            return py::make_tuple(fit.slope, fit.intercept);
        },
        py::arg("abscissae"), py::arg("values"),
        "(slope, intercept) of the log-log least-squares line");

    m.def(
        "residue_sweep",
        [](const std::string& func, double alpha, double t_final,
           const std::vector<std::int64_t>& n_list) {
            return report_to_dict(fracl1::residue_sweep(
                fracl1::make_test_function(func), fracl1::FracOrder(alpha),
                t_final, n_list));
        },
        py::arg("func"), py::arg("alpha"), py::arg("t_final"),
        py::arg("n_list"));
    m.def(
        "em_sweep",
        [](double alpha, const std::vector<std::int64_t>& m_list) {
            return report_to_dict(
                fracl1::em_sweep(fracl1::FracOrder(alpha), m_list));
        },
        py::arg("alpha"), py::arg("m_list"));
    m.def(
        "operator_rate_sweep",
        [](const std::string& func, double alpha, double t_final,
           const std::vector<std::int64_t>& n_list, const std::string& which) {
            fracl1::OperatorKind kind;
            if (which == "integral")
                kind = fracl1::OperatorKind::integral;
            else if (which == "derivative")
                kind = fracl1::OperatorKind::derivative;
            else
                throw std::invalid_argument(
                    "which must be 'integral' or 'derivative'");
            return report_to_dict(fracl1::operator_rate_sweep(
                fracl1::make_test_function(func), fracl1::FracOrder(alpha),
                t_final, n_list, kind));
        },
        py::arg("func"), py::arg("alpha"), py::arg("t_final"),
        py::arg("n_list"), py::arg("which"));
}
