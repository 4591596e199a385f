// Part of fracl1: discrete fractional calculus on uniform meshes.
// Copyright 2026 the fracl1 authors
// SPDX-License-Identifier: Apache-2.0

#include "fracl1/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace fracl1 {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn2 = 0.693147180559945309417232121458176568;

// 13-term Lanczos rational approximation for double precision,
// g = 6.024680040776729583740234375, max error ~1.2e-17. Coefficient
// tables in increasing power order; the denominator is
// z(z+1)...(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr double kLanczosDenom[13] = {
    0.0,        39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

double lanczos_sum(double z)
{
    double num = kLanczosNum[12];
    double den = kLanczosDenom[12];
    for (int i = 11; i >= 0; --i) {
        num = num * z + kLanczosNum[i];
        den = den * z + kLanczosDenom[i];
    }
    return num / den;
}

} // namespace

double sin_pi(double x)
{
    // Reduce to [0, 2) before multiplying by pi so large or near-integer
    // arguments keep exact zeros.
    double r = x - 2.0 * std::floor(x * 0.5);
    if (r == 0.0 || r == 1.0)
        return 0.0;
    if (r > 1.0)
        return -std::sin(kPi * (r - 1.0));
    if (r > 0.5)
        return std::sin(kPi * (1.0 - r));
    return std::sin(kPi * r);
}

double gamma_fn(double x)
{
    if (std::isnan(x))
        throw std::domain_error("gamma_fn: NaN argument");
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    if (x < 0.5)
        return kPi / (sin_pi(x) * gamma_fn(1.0 - x));
    const double zgh = x + kLanczosG - 0.5;
    return lanczos_sum(x) * std::pow(zgh, x - 0.5) * std::exp(-zgh);
}

double dirichlet_eta_accelerated(double s)
{
    if (!(s > 0.0))
        throw std::domain_error("dirichlet_eta_accelerated: needs s > 0");
    constexpr int n = 50;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::pow(static_cast<double>(k + 1), -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return acc / d;
}

double zeta_reflection_factor(double s)
{
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sin_pi(0.5 * s) *
           gamma_fn(1.0 - s);
}

double zeta_fn(double s)
{
    if (std::isnan(s))
        throw std::domain_error("zeta_fn: NaN argument");
    if (s == 1.0)
        throw std::domain_error("zeta_fn: pole at s = 1");
    if (s == 0.0)
        return -0.5;
    if (s >= 0.5)
        return dirichlet_eta_accelerated(s) /
               (-std::expm1((1.0 - s) * kLn2));
    return zeta_reflection_factor(s) * zeta_fn(1.0 - s);
}

} // namespace fracl1
