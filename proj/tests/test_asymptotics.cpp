// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fracl1/euler_maclaurin.hpp"
#include "fracl1/rate_fit.hpp"
#include "fracl1/special_functions.hpp"
#include "fracl1/weights.hpp"
#include "oracles.hpp"

using fracl1::EMDecomposition;
using fracl1::FracOrder;
using fracl1::QuadratureSpec;

TEST_CASE("em_integrand_f: endpoint closed forms and domain")
{
    const std::int64_t m = 100;
    const double md = 100.0;
    for (double alpha : {0.3, 0.6}) {
        const FracOrder order(alpha);
        const double at_m = std::pow(1.0 / md, alpha) *
                            (1.0 - std::pow(1.0 - 1.0 / md, 1.0 - alpha));
        CHECK(fracl1::em_integrand_f(md, m, order) ==
              doctest::Approx(at_m).epsilon(1e-12));
        const double at_1 = std::pow(1.0 / md, 1.0 - alpha) *
                            (1.0 - std::pow(1.0 - 1.0 / md, alpha));
        CHECK(fracl1::em_integrand_f(1.0, m, order) ==
              doctest::Approx(at_1).epsilon(1e-12));
        CHECK_THROWS_AS(fracl1::em_integrand_f(0.999, m, order),
                        std::domain_error);
        CHECK_THROWS_AS(fracl1::em_integrand_f(100.001, m, order),
                        std::domain_error);
    }
}

TEST_CASE("em_integrand_f: m * sum over integers reproduces S_m")
{
    const std::int64_t m = 100;
    const FracOrder order(0.3);
    double sum = 0.0;
    for (std::int64_t k = 1; k <= m; ++k)
        sum += fracl1::em_integrand_f(static_cast<double>(k), m, order);
    const double s = fracl1::kernel_S(m, order);
    CHECK(std::fabs(static_cast<double>(m) * sum - s) <= 1e-13 * s);
}

TEST_CASE("em_integrand_fprime: finite differences at interior points")
{
    // Central differences with eps = 1e-5; points are kept a unit or so
    // away from the edges where the derivative grows without bound.
    const double eps = 1e-5;
    const FracOrder mid(0.6);
    {
        const std::int64_t m = 100;
        const double x = 50.0;
        const double fd = (fracl1::em_integrand_f(x + eps, m, mid) -
                           fracl1::em_integrand_f(x - eps, m, mid)) /
                          (2.0 * eps);
        CHECK(std::fabs(fracl1::em_integrand_fprime(x, m, mid) - fd) <=
              1e-6);
    }
    struct Config {
        std::int64_t m;
        double alpha;
    };
    std::mt19937 rng(12345);
    for (const Config cfg : {Config{50, 0.25}, Config{100, 0.6},
                             Config{200, 0.85}}) {
        const FracOrder order(cfg.alpha);
        std::uniform_real_distribution<double> draw(
            1.5, static_cast<double>(cfg.m) - 1.5);
        for (int rep = 0; rep < 20; ++rep) {
            const double x = draw(rng);
            const double fd =
                (fracl1::em_integrand_f(x + eps, cfg.m, order) -
                 fracl1::em_integrand_f(x - eps, cfg.m, order)) /
                (2.0 * eps);
            CHECK(std::fabs(fracl1::em_integrand_fprime(x, cfg.m, order) -
                            fd) <= 1e-6);
        }
    }
}

TEST_CASE("em_integrand_fprime: symmetry zero and edge signs")
{
    const FracOrder half(0.5);
    // At alpha = 1/2 the integrand is symmetric about (m+1)/2.
    CHECK(std::fabs(fracl1::em_integrand_fprime(50.5, 100, half)) <= 1e-20);
    CHECK(std::fabs(fracl1::em_integrand_fprime(500.5, 1000, half)) <=
          1e-20);

    // The boundary layers make f steeply decreasing off the left edge
    // and steeply increasing into the right edge; mirrored points about
    // (m+1)/2 carry opposite values at alpha = 1/2.
    const double left = fracl1::em_integrand_fprime(2.5, 1000, half);
    const double mirror = fracl1::em_integrand_fprime(998.5, 1000, half);
    CHECK(left < 0.0);
    CHECK(fracl1::em_integrand_fprime(997.5, 1000, half) > 0.0);
    CHECK(std::fabs(left + mirror) <= 1e-15 * std::fabs(mirror));

    CHECK_THROWS_AS(fracl1::em_integrand_fprime(1.0, 100, half),
                    std::domain_error);
    CHECK_THROWS_AS(fracl1::em_integrand_fprime(100.0, 100, half),
                    std::domain_error);
}

TEST_CASE("periodized_bernoulli_p1: sawtooth")
{
    CHECK(fracl1::periodized_bernoulli_p1(3.0) == 0.0);
    CHECK(fracl1::periodized_bernoulli_p1(-2.0) == 0.0);
    CHECK(fracl1::periodized_bernoulli_p1(2.25) ==
          doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(fracl1::periodized_bernoulli_p1(2.75) ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(fracl1::periodized_bernoulli_p1(-1.75) ==
          doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(fracl1::periodized_bernoulli_p1(7.5) == 0.0);
}

TEST_CASE("em_integral: limit envelope and symmetry")
{
    const QuadratureSpec spec{};
    const FracOrder order(0.75);
    const double limit =
        fracl1::gamma_fn(1.75) * fracl1::gamma_fn(1.25);
    const double got = fracl1::em_integral(10000, order, spec);
    CHECK(std::fabs(got - limit) <= 2.0 * std::pow(10000.0, -0.25));

    for (std::int64_t m : {100, 1000, 10000}) {
        const double a = fracl1::em_integral(m, FracOrder(0.3), spec);
        const double b = fracl1::em_integral(m, FracOrder(0.7), spec);
        CHECK(std::fabs(a - b) <= 2.0 * spec.abs_tol);
    }
    CHECK_THROWS_AS(fracl1::em_integral(1, order, spec), std::domain_error);
}

TEST_CASE("em_endpoint_term: closed form, decay, swap invariance")
{
    // At m = 1 both factors of f(1) are 1.
    for (double alpha : {0.2, 0.5, 0.9})
        CHECK(fracl1::em_endpoint_term(1, FracOrder(alpha)) == 1.0);

    CHECK(fracl1::em_endpoint_term(10000, FracOrder(0.5)) <=
          2.0 * std::pow(10000.0, -0.5));

    for (std::int64_t m : {2, 10, 1000}) {
        const double a = fracl1::em_endpoint_term(m, FracOrder(0.3));
        const double b = fracl1::em_endpoint_term(m, FracOrder(0.7));
        CHECK(std::fabs(a - b) <= 1e-15 * a);
    }
    CHECK_THROWS_AS(fracl1::em_endpoint_term(0, FracOrder(0.5)),
                    std::domain_error);
}

TEST_CASE("em_remainder_integral: closure against the direct sum")
{
    const QuadratureSpec spec{};
    for (std::int64_t m : {10, 100}) {
        const FracOrder order(0.3);
        const double s = fracl1::kernel_S(m, order);
        const double gap = s - fracl1::em_integral(m, order, spec) -
                           fracl1::em_endpoint_term(m, order);
        CHECK(std::fabs(gap - fracl1::em_remainder_integral(m, order,
                                                            spec)) <= 1e-8);
    }
    CHECK_THROWS_AS(fracl1::em_remainder_integral(1, FracOrder(0.5), spec),
                    std::domain_error);
}

TEST_CASE("em_remainder_integral: decay envelope")
{
    const QuadratureSpec spec{};
    const FracOrder order(0.7);
    for (std::int64_t m : {10, 100, 1000, 10000})
        CHECK(std::fabs(fracl1::em_remainder_integral(m, order, spec)) <=
              2.0 * std::pow(static_cast<double>(m), -order.beta()));
}

TEST_CASE("em_remainder_integral: m = 2 against a fixed-order rule")
{
    // Independent evaluation: substitute x = 1 + u^2 on the left half
    // and x = 2 - v^2 on the right half, then apply composite 32-point
    // Gauss-Legendre. Both substitutions absorb the edge singularities
    // of f' at alpha = 1/2.
    const QuadratureSpec spec{};
    const FracOrder half(0.5);
    const std::int64_t m = 2;
    const double s = std::sqrt(0.5);
    const auto left = [&](double u) {
        return fracl1::em_integrand_fprime(1.0 + u * u, m, half) *
               (u * u - 0.5) * 2.0 * u;
    };
    const auto right = [&](double v) {
        return fracl1::em_integrand_fprime(2.0 - v * v, m, half) *
               (0.5 - v * v) * 2.0 * v;
    };
    const double ref = 2.0 * (oracle::composite_gauss(left, 0.0, s, 32, 8) +
                              oracle::composite_gauss(right, 0.0, s, 32, 8));
    CHECK(std::fabs(fracl1::em_remainder_integral(2, half, spec) - ref) <=
          1e-8);
}

TEST_CASE("em_error: anchors, symmetry, monotone envelope")
{
    const QuadratureSpec spec{};
    CHECK(fracl1::em_error(1000, FracOrder(0.5), spec) >
          fracl1::em_error(100000, FracOrder(0.5), spec));

    for (std::int64_t m : {100, 10000}) {
        const double lo = fracl1::em_error(m, FracOrder(0.25), spec);
        const double hi = fracl1::em_error(m, FracOrder(0.75), spec);
        CHECK(std::fabs(lo - hi) <= 2.0 * spec.abs_tol);
    }
}

TEST_CASE("em_error: log-log rate matches -beta")
{
    const QuadratureSpec spec{};
    const std::vector<double> ms = {100.0, 1000.0, 10000.0, 100000.0};
    for (double alpha : {0.6, 0.75, 0.9}) {
        const FracOrder order(alpha);
        std::vector<double> errs;
        for (double m : ms)
            errs.push_back(fracl1::em_error(
                static_cast<std::int64_t>(m), order, spec));
        const double slope = fracl1::rate_fit(ms, errs).slope;
        CHECK(std::fabs(slope + order.beta()) <= 0.07);
    }
}

TEST_CASE("em_decompose: identity closure across the grid")
{
    const QuadratureSpec spec{};
    for (std::int64_t m : {10, 50, 100}) {
        for (double alpha : {0.25, 0.5, 0.75}) {
            const FracOrder order(alpha);
            const EMDecomposition d = fracl1::em_decompose(m, order, spec);
            CHECK(d.m == m);
            CHECK(d.alpha == alpha);
            CHECK(d.sum_value == fracl1::kernel_S(m, order));
            const double rebuilt =
                d.integral_term + d.endpoint_term + d.remainder_term;
            CHECK(std::fabs(d.sum_value - rebuilt) <= 1e-8);
        }
    }
    // Spot check with a different order away from the grid above.
    const EMDecomposition d = fracl1::em_decompose(50, FracOrder(0.4), spec);
    CHECK(std::fabs(d.sum_value - (d.integral_term + d.endpoint_term +
                                   d.remainder_term)) <= 1e-8);
}

TEST_CASE("rate_fit: exact laws and error handling")
{
    const std::vector<double> xs = {1.0, 2.0, 4.0, 8.0, 64.0};
    std::vector<double> vs;
    for (double x : xs)
        vs.push_back(std::pow(x, -0.5));
    const fracl1::RateFit fit = fracl1::rate_fit(xs, vs);
    CHECK(std::fabs(fit.slope + 0.5) <= 1e-12);
    CHECK(std::fabs(fit.intercept) <= 1e-12);

    std::vector<double> flat(xs.size(), 3.25);
    CHECK(std::fabs(fracl1::rate_fit(xs, flat).slope) <= 1e-12);

    // y = 2 x^{1.7}
    vs.clear();
    for (double x : xs)
        vs.push_back(2.0 * std::pow(x, 1.7));
    const fracl1::RateFit up = fracl1::rate_fit(xs, vs);
    CHECK(std::fabs(up.slope - 1.7) <= 1e-12);
    CHECK(std::fabs(up.intercept - std::log(2.0)) <= 1e-12);

    CHECK_THROWS_AS(fracl1::rate_fit({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fracl1::rate_fit({1.0, 2.0}, {1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fracl1::rate_fit({1.0, 2.0}, {1.0, -1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fracl1::rate_fit({1.0, 2.0}, {1.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fracl1::rate_fit({3.0, 3.0}, {1.0, 2.0}),
                    std::invalid_argument);
}
