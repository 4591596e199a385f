// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fracl1/analytic.hpp"
#include "fracl1/euler_maclaurin.hpp"
#include "fracl1/mesh.hpp"
#include "fracl1/operators.hpp"
#include "fracl1/rate_fit.hpp"

namespace fracl1 {

namespace {

// Errors at or below this level are floating-point noise; slope fitting
// over them is meaningless and the report is flagged degenerate instead.
constexpr double kDegenerateLevel = 1e-13;

std::string fmt_sci(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string fmt_num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_list(const std::vector<std::int64_t>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

void require_increasing(const std::vector<std::int64_t>& xs,
                        std::int64_t minimum, const char* who)
{
    if (xs.empty())
        throw std::invalid_argument(std::string(who) + ": empty point list");
    std::int64_t prev = minimum - 1;
    for (std::int64_t x : xs) {
        if (x < minimum)
            throw std::invalid_argument(std::string(who) +
                                        ": point below minimum");
        if (x <= prev)
            throw std::invalid_argument(std::string(who) +
                                        ": points must increase");
        prev = x;
    }
}

void finalize_fit(ConvergenceReport& report)
{
    bool all_tiny = true;
    for (double e : report.errors)
        if (e > kDegenerateLevel) {
            all_tiny = false;
            break;
        }
    if (all_tiny || report.errors.size() < 2) {
        report.degenerate = true;
        report.slope = 0.0;
        report.intercept = 0.0;
        return;
    }
    const RateFit fit = rate_fit(report.abscissae, report.errors);
    report.slope = fit.slope;
    report.intercept = fit.intercept;
}

} // namespace

TestFunction make_test_function(const std::string& name)
{
    TestFunction fn;
    fn.name = name;
    if (name == "cubic") {
        fn.evaluator = [](double t) { return t * t * t; };
        fn.derivative = [](double t) { return 3.0 * t * t; };
        fn.exact_caputo = [](double alpha, double t) {
            return exact_caputo_monomial(3.0, FracOrder(alpha), t);
        };
        fn.exact_integral = [](double alpha, double t) {
            return exact_frac_integral_monomial(3.0, FracOrder(alpha), t);
        };
        return fn;
    }
    if (name == "sine") {
        fn.evaluator = [](double t) { return std::sin(t); };
        fn.derivative = [](double t) { return std::cos(t); };
        fn.exact_caputo = [](double alpha, double t) {
            return caputo_quadrature([](double s) { return std::cos(s); },
                                     FracOrder(alpha), t, QuadratureSpec{});
        };
        fn.exact_integral = [](double alpha, double t) {
            return frac_integral_quadrature(
                [](double s) { return std::sin(s); }, FracOrder(alpha), t,
                QuadratureSpec{});
        };
        return fn;
    }
    if (name == "kink") {
        // Sampled pointwise only; the derivative jump at t = 1/2 never
        // enters any computation.
        fn.evaluator = [](double t) { return std::fabs(t - 0.5); };
        return fn;
    }
    const std::string prefix = "monomial:";
    if (name.rfind(prefix, 0) == 0) {
        double p;
        try {
            std::size_t used = 0;
            p = std::stod(name.substr(prefix.size()), &used);
            if (used != name.size() - prefix.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument(
                "make_test_function: malformed monomial exponent in '" +
                name + "'");
        }
        if (!(p >= 0.0))
            throw std::invalid_argument(
                "make_test_function: monomial exponent must be >= 0");
        fn.evaluator = [p](double t) { return std::pow(t, p); };
        if (p == 0.0)
            fn.derivative = [](double) { return 0.0; };
        else if (p >= 1.0)
            fn.derivative = [p](double t) { return p * std::pow(t, p - 1.0); };
        if (p == 0.0 || p >= 1.0)
            fn.exact_caputo = [p](double alpha, double t) {
                return exact_caputo_monomial(p, FracOrder(alpha), t);
            };
        fn.exact_integral = [p](double alpha, double t) {
            return exact_frac_integral_monomial(p, FracOrder(alpha), t);
        };
        return fn;
    }
    throw std::invalid_argument("make_test_function: unknown function '" +
                                name + "'");
}

ConvergenceReport residue_sweep(const TestFunction& func,
                                const FracOrder& order, double t_final,
                                const std::vector<std::int64_t>& n_list)
{
    if (!(t_final > 0.0))
        throw std::invalid_argument("residue_sweep: t_final must be > 0");
    require_increasing(n_list, 1, "residue_sweep");

    ConvergenceReport report;
    for (std::int64_t n : n_list) {
        const UniformMesh mesh(t_final / static_cast<double>(n), n);
        const GridFunction y = sample_on_mesh(func.evaluator, mesh);
        report.abscissae.push_back(mesh.h);
        report.errors.push_back(residue(y, order, n));
    }
    report.config = {{"sweep", "residue"},
                     {"func", func.name},
                     {"alpha", fmt_num(order.alpha())},
                     {"t_final", fmt_num(t_final)},
                     {"n_list", join_list(n_list)}};
    finalize_fit(report);
    return report;
}

ConvergenceReport em_sweep(const FracOrder& order,
                           const std::vector<std::int64_t>& m_list)
{
    return em_sweep(order, m_list, QuadratureSpec{});
}

ConvergenceReport em_sweep(const FracOrder& order,
                           const std::vector<std::int64_t>& m_list,
                           const QuadratureSpec& spec)
{
    require_increasing(m_list, 2, "em_sweep");

    ConvergenceReport report;
    for (std::int64_t m : m_list) {
        report.abscissae.push_back(static_cast<double>(m));
        report.errors.push_back(em_error(m, order, spec));
    }
    report.config = {{"sweep", "em_error"},
                     {"alpha", fmt_num(order.alpha())},
                     {"m_list", join_list(m_list)}};
    finalize_fit(report);
    return report;
}

ConvergenceReport operator_rate_sweep(const TestFunction& func,
                                      const FracOrder& order, double t_final,
                                      const std::vector<std::int64_t>& n_list,
                                      OperatorKind which)
{
    if (!(t_final > 0.0))
        throw std::invalid_argument("operator_rate_sweep: t_final must be > 0");
    require_increasing(n_list, 1, "operator_rate_sweep");

    double exact;
    if (which == OperatorKind::integral) {
        if (!func.exact_integral)
            throw std::invalid_argument(
                "operator_rate_sweep: '" + func.name +
                "' has no fractional-integral reference");
        exact = func.exact_integral(order.alpha(), t_final);
    } else {
        if (!func.exact_caputo)
            throw std::invalid_argument(
                "operator_rate_sweep: '" + func.name +
                "' has no fractional-derivative reference");
        exact = func.exact_caputo(order.alpha(), t_final);
    }

    ConvergenceReport report;
    for (std::int64_t n : n_list) {
        const UniformMesh mesh(t_final / static_cast<double>(n), n);
        const GridFunction y = sample_on_mesh(func.evaluator, mesh);
        const double discrete = which == OperatorKind::integral
                                    ? frac_integral_L1_at(y, order, n)
                                    : caputo_L1_at(y, order, n);
        report.abscissae.push_back(mesh.h);
        report.errors.push_back(std::fabs(discrete - exact));
    }
    report.config = {
        {"sweep", "operator_rate"},
        {"which", which == OperatorKind::integral ? "integral" : "derivative"},
        {"func", func.name},
        {"alpha", fmt_num(order.alpha())},
        {"t_final", fmt_num(t_final)},
        {"n_list", join_list(n_list)}};
    finalize_fit(report);
    return report;
}

void emit_csv(const ConvergenceReport& report, std::ostream& os)
{
    if (report.abscissae.size() != report.errors.size())
        throw std::invalid_argument("emit_csv: malformed report");
    os << "abscissa,error\n";
    for (std::size_t i = 0; i < report.abscissae.size(); ++i)
        os << fmt_sci(report.abscissae[i]) << ',' << fmt_sci(report.errors[i])
           << '\n';
    for (const auto& kv : report.config)
        os << "# " << kv.first << " = " << kv.second << '\n';
    if (report.degenerate) {
        os << "# degenerate = true\n";
    } else {
        os << "# slope = " << fmt_sci(report.slope) << '\n';
        os << "# intercept = " << fmt_sci(report.intercept) << '\n';
    }
    if (!os)
        throw std::runtime_error("emit_csv: stream write failed");
}

void emit_csv(const ConvergenceReport& report, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open '" + path + "'");
    emit_csv(report, out);
    out.close();
    if (!out)
        throw std::runtime_error("emit_csv: write to '" + path + "' failed");
}

} // namespace fracl1
