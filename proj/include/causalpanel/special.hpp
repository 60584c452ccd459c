#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "causalpanel/common.hpp"

namespace causalpanel {

inline double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double norm_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

// Inverse normal CDF: Abramowitz-Stegun 26.2.23 start, Newton polish.
inline double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("norm_quantile: p must be in (0,1)");
    double pl = p < 0.5 ? p : 1.0 - p;
    double t = std::sqrt(-2.0 * std::log(pl));
    double x = t - (2.30753 + 0.27061 * t) / (1.0 + 0.99229 * t + 0.04481 * t * t);
    if (p < 0.5) x = -x;
    for (int i = 0; i < 6; ++i) {
        double err = norm_cdf(x) - p;
        double d = norm_pdf(x);
        if (d <= 0.0) break;
        double step = err / d;
        x -= step;
        if (std::fabs(step) < 1e-14 * (1.0 + std::fabs(x))) break;
    }
    return x;
}

namespace detail {

// Continued fraction for the incomplete beta function (modified Lentz).
inline double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 400;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace detail

// Regularized incomplete beta I_x(a, b).
inline double ibeta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double lbt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                 a * std::log(x) + b * std::log1p(-x);
    double bt = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * detail::betacf(a, b, x) / a;
    return 1.0 - bt * detail::betacf(b, a, 1.0 - x) / b;
}

// Upper tail of the F distribution with (d1, d2) dof.
inline double f_sf(double f, double d1, double d2) {
    if (!(d1 > 0.0 && d2 > 0.0)) throw DomainError("f_sf: dof must be positive");
    if (std::isinf(f)) return 0.0;
    if (f <= 0.0) return 1.0;
    return ibeta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

// Two-sided p for a correlation r at effective sample size n_eff,
// via the Fisher z-transform.
inline double fisher_z_pvalue(double r, double n_eff) {
    if (n_eff <= 0.0) throw SampleSizeError("fisher_z_pvalue: effective n <= 0");
    if (std::fabs(r) >= 1.0) return 0.0;
    double z = std::atanh(r) * std::sqrt(n_eff);
    return 2.0 * norm_sf(std::fabs(z));
}

}  // namespace causalpanel
