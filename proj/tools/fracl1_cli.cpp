// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Every subcommand prints CSV (to stdout or
// --output) with '#'-prefixed metadata rows. Exit codes: 0 success,
// 2 invalid arguments, 3 numerical-tolerance failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fracl1/experiments.hpp"
#include "fracl1/mesh.hpp"
#include "fracl1/operators.hpp"
#include "fracl1/quadrature.hpp"
#include "fracl1/weights.hpp"

namespace {

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

using Meta = std::vector<std::pair<std::string, std::string>>;

void write_pairs(std::ostream& os, const std::string& header,
                 const std::vector<std::pair<double, double>>& rows,
                 const Meta& meta)
{
    os << header << '\n';
    for (const auto& row : rows)
        os << fmt_sci(row.first) << ',' << fmt_sci(row.second) << '\n';
    for (const auto& kv : meta)
        os << "# " << kv.first << " = " << kv.second << '\n';
    if (!os)
        throw std::runtime_error("write failed");
}

// Runs `emit` against stdout or the requested file.
template <typename Fn>
void with_destination(const std::string& output, Fn emit)
{
    if (output.empty()) {
        emit(std::cout);
        std::cout.flush();
        if (!std::cout)
            throw std::runtime_error("write to stdout failed");
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open '" + output + "'");
    emit(file);
    file.close();
    if (!file)
        throw std::runtime_error("write to '" + output + "' failed");
}

std::vector<std::int64_t> default_powers(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; n *= 2)
        out.push_back(n);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "fracl1: L1-scheme fractional integral/derivative composition "
        "experiments"};
    app.require_subcommand(1);

    // weights --beta B --n N
    auto* weights_cmd =
        app.add_subcommand("weights", "Convolution weights b_1..b_N");
    double w_beta = 0.5;
    std::int64_t w_n = 0;
    std::string w_output;
    weights_cmd->add_option("--beta", w_beta, "Exponent in (0,1]")
        ->required();
    weights_cmd->add_option("--n", w_n, "Number of weights")->required();
    weights_cmd->add_option("--output", w_output, "Write CSV here");

    // kernel --alpha A --n N
    auto* kernel_cmd =
        app.add_subcommand("kernel", "Composition kernel S_1..S_N");
    double k_alpha = 0.5;
    std::int64_t k_n = 0;
    std::string k_output;
    kernel_cmd->add_option("--alpha", k_alpha, "Order in (0,1)")->required();
    kernel_cmd->add_option("--n", k_n, "Table length")->required();
    kernel_cmd->add_option("--output", k_output, "Write CSV here");

    // apply --op OP --func F --alpha A --n N --t T
    auto* apply_cmd = app.add_subcommand(
        "apply", "Apply a discrete operator to a sampled test function");
    std::string a_op, a_func;
    double a_alpha = 0.5, a_t = 1.0;
    std::int64_t a_n = 0;
    std::string a_output;
    apply_cmd->add_option("--op", a_op, "integral | derivative | compose")
        ->required()
        ->check(CLI::IsMember({"integral", "derivative", "compose"}));
    apply_cmd
        ->add_option("--func", a_func,
                     "cubic | sine | kink | monomial:P")
        ->required();
    apply_cmd->add_option("--alpha", a_alpha, "Order in (0,1)")->required();
    apply_cmd->add_option("--n", a_n, "Number of steps")->required();
    apply_cmd->add_option("--t", a_t, "Final time (default 1)");
    apply_cmd->add_option("--output", a_output, "Write CSV here");

    // residue --func F --alpha A --t T --n-list ... | --decades I_MAX
    auto* residue_cmd = app.add_subcommand(
        "residue", "Residue of the composed operator versus h");
    std::string r_func;
    double r_alpha = 0.5, r_t = 1.0;
    std::vector<std::int64_t> r_nlist;
    int r_decades = 0;
    std::string r_output;
    residue_cmd->add_option("--func", r_func, "Test function")->required();
    residue_cmd->add_option("--alpha", r_alpha, "Order in (0,1)")
        ->required();
    residue_cmd->add_option("--t", r_t, "Final time (default 1)");
    auto* r_nlist_opt =
        residue_cmd
            ->add_option("--n-list", r_nlist,
                         "Comma-separated step counts (default "
                         "8,16,...,8192)")
            ->delimiter(',');
    residue_cmd
        ->add_option("--decades", r_decades,
                     "Use n = 10^1..10^I instead of powers of two (I <= 5; "
                     "the composition cost grows as n^2)")
        ->check(CLI::Range(1, 5))
        ->excludes(r_nlist_opt);
    residue_cmd->add_option("--output", r_output, "Write CSV here");

    // em --alpha A --m-list ...
    auto* em_cmd = app.add_subcommand(
        "em", "Deviation of the rescaled kernel integral from its limit");
    double e_alpha = 0.5;
    std::vector<std::int64_t> e_mlist;
    int e_subdiv = 0;
    std::string e_output;
    em_cmd->add_option("--alpha", e_alpha, "Order in (0,1)")->required();
    em_cmd
        ->add_option("--m-list", e_mlist,
                     "Comma-separated kernel lengths (default "
                     "100,1000,10000,100000)")
        ->delimiter(',');
    em_cmd
        ->add_option("--quad-subdivisions", e_subdiv,
                     "Cap on adaptive quadrature subdivisions")
        ->check(CLI::PositiveNumber);
    em_cmd->add_option("--output", e_output, "Write CSV here");

    // rates --which W --func F --alpha A --n-list ...
    auto* rates_cmd = app.add_subcommand(
        "rates", "Discrete-versus-exact operator error rates");
    std::string t_which, t_func;
    double t_alpha = 0.5, t_t = 1.0;
    std::vector<std::int64_t> t_nlist;
    std::string t_output;
    rates_cmd->add_option("--which", t_which, "integral | derivative")
        ->required()
        ->check(CLI::IsMember({"integral", "derivative"}));
    rates_cmd->add_option("--func", t_func, "Test function")->required();
    rates_cmd->add_option("--alpha", t_alpha, "Order in (0,1)")->required();
    rates_cmd->add_option("--t", t_t, "Final time (default 1)");
    rates_cmd
        ->add_option("--n-list", t_nlist,
                     "Comma-separated step counts (default 64,...,4096)")
        ->delimiter(',');
    rates_cmd->add_option("--output", t_output, "Write CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*weights_cmd) {
            const fracl1::WeightSeq seq = fracl1::weight_sequence(w_n, w_beta);
            std::vector<std::pair<double, double>> rows;
            for (std::int64_t j = 1; j <= w_n; ++j)
                rows.emplace_back(static_cast<double>(j),
                                  seq.values[static_cast<std::size_t>(j - 1)]);
            const Meta meta = {{"beta", fmt_num(w_beta)},
                               {"n", std::to_string(w_n)}};
            with_destination(w_output, [&](std::ostream& os) {
                write_pairs(os, "index,value", rows, meta);
            });
        } else if (*kernel_cmd) {
            const fracl1::KernelS table =
                fracl1::kernel_table(k_n, fracl1::FracOrder(k_alpha));
            std::vector<std::pair<double, double>> rows;
            for (std::int64_t m = 1; m <= k_n; ++m)
                rows.emplace_back(
                    static_cast<double>(m),
                    table.values[static_cast<std::size_t>(m - 1)]);
            const Meta meta = {{"alpha", fmt_num(k_alpha)},
                               {"n", std::to_string(k_n)},
                               {"limit", fmt_sci(table.limit)}};
            with_destination(k_output, [&](std::ostream& os) {
                write_pairs(os, "index,value", rows, meta);
            });
        } else if (*apply_cmd) {
            const fracl1::FracOrder order(a_alpha);
            const fracl1::TestFunction func =
                fracl1::make_test_function(a_func);
            if (a_n < 1)
                throw std::invalid_argument("apply: --n must be >= 1");
            const fracl1::UniformMesh mesh(a_t / static_cast<double>(a_n),
                                           a_n);
            const fracl1::GridFunction y =
                fracl1::sample_on_mesh(func.evaluator, mesh);
            fracl1::GridFunction out =
                a_op == "integral"
                    ? fracl1::frac_integral_L1(y, order)
                    : a_op == "derivative"
                          ? fracl1::caputo_L1(y, order)
                          : fracl1::compose_kernel(y, order);
            std::vector<std::pair<double, double>> rows;
            for (std::int64_t k = 0; k <= a_n; ++k)
                rows.emplace_back(mesh.t(k),
                                  out.samples[static_cast<std::size_t>(k)]);
            const Meta meta = {{"op", a_op},
                               {"func", a_func},
                               {"alpha", fmt_num(a_alpha)},
                               {"n", std::to_string(a_n)},
                               {"t", fmt_num(a_t)}};
            with_destination(a_output, [&](std::ostream& os) {
                write_pairs(os, "t,value", rows, meta);
            });
        } else if (*residue_cmd) {
            std::vector<std::int64_t> ns = r_nlist;
            if (r_decades > 0) {
                ns.clear();
                std::int64_t n = 1;
                for (int i = 1; i <= r_decades; ++i) {
                    n *= 10;
                    ns.push_back(n);
                }
            } else if (ns.empty()) {
                ns = default_powers(8, 8192);
            }
            const fracl1::ConvergenceReport report = fracl1::residue_sweep(
                fracl1::make_test_function(r_func), fracl1::FracOrder(r_alpha),
                r_t, ns);
            with_destination(r_output, [&](std::ostream& os) {
                fracl1::emit_csv(report, os);
            });
        } else if (*em_cmd) {
            std::vector<std::int64_t> ms = e_mlist;
            if (ms.empty())
                ms = {100, 1000, 10000, 100000};
            fracl1::QuadratureSpec spec{};
            if (e_subdiv > 0)
                spec.max_subdivisions = e_subdiv;
            const fracl1::ConvergenceReport report =
                fracl1::em_sweep(fracl1::FracOrder(e_alpha), ms, spec);
            with_destination(e_output, [&](std::ostream& os) {
                fracl1::emit_csv(report, os);
            });
        } else if (*rates_cmd) {
            std::vector<std::int64_t> ns = t_nlist;
            if (ns.empty())
                ns = default_powers(64, 4096);
            const fracl1::OperatorKind kind =
                t_which == "integral" ? fracl1::OperatorKind::integral
                                      : fracl1::OperatorKind::derivative;
            const fracl1::ConvergenceReport report =
                fracl1::operator_rate_sweep(fracl1::make_test_function(t_func),
                                            fracl1::FracOrder(t_alpha), t_t,
                                            ns, kind);
            with_destination(t_output, [&](std::ostream& os) {
                fracl1::emit_csv(report, os);
            });
        }
    } catch (const fracl1::QuadratureError& e) {
        std::cerr << "fracl1: numerical tolerance failure: " << e.what()
                  << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "fracl1: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
