#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "causalpanel/common.hpp"

namespace causalpanel {

struct OlsFit {
    Eigen::VectorXd beta;
    Eigen::VectorXd residuals;
    double ssr = 0.0;
    Eigen::Index n = 0;
    Eigen::Index k = 0;

    // Gaussian log-likelihood AIC, matching the usual OLS definition.
    double aic() const {
        double sig2 = ssr / static_cast<double>(n);
        if (sig2 <= 0.0) return -std::numeric_limits<double>::infinity();
        double llf = -0.5 * static_cast<double>(n) *
                     (std::log(2.0 * std::numbers::pi) + std::log(sig2) + 1.0);
        return -2.0 * llf + 2.0 * static_cast<double>(k);
    }
};

inline OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < X.cols()) throw CollinearError("ols: design matrix is rank deficient");
    OlsFit fit;
    fit.beta = qr.solve(y);
    fit.residuals = y - X * fit.beta;
    fit.ssr = fit.residuals.squaredNorm();
    fit.n = X.rows();
    fit.k = X.cols();
    return fit;
}

// Standard errors of OLS coefficients; sigma^2 = SSR / (n - k).
inline Eigen::VectorXd ols_se(const Eigen::MatrixXd& X, const OlsFit& fit) {
    double dof = static_cast<double>(fit.n - fit.k);
    if (dof <= 0.0) throw SampleSizeError("ols_se: no residual degrees of freedom");
    double sig2 = fit.ssr / dof;
    Eigen::MatrixXd xtx_inv =
        (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(X.cols(), X.cols()));
    return (sig2 * xtx_inv.diagonal()).cwiseMax(0.0).cwiseSqrt();
}

// Ridge fallback for singular systems: (X'X + lambda I) b = X'y with
// lambda = scale * trace(X'X).
inline Eigen::VectorXd ridge_solve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                   double scale = 1e-8) {
    Eigen::MatrixXd xtx = X.transpose() * X;
    double lambda = scale * std::max(xtx.trace(), 1e-300);
    xtx.diagonal().array() += lambda;
    return xtx.ldlt().solve(X.transpose() * y);
}

struct RobustFit {
    Eigen::VectorXd beta;
    Eigen::VectorXd residuals;
    bool converged = false;
    int iterations = 0;
};

namespace detail {

inline double mad_scale(const Eigen::VectorXd& r) {
    // median(|r|) / 0.6745, centered at zero
    std::vector<double> a(r.data(), r.data() + r.size());
    for (double& v : a) v = std::fabs(v);
    auto mid = a.begin() + a.size() / 2;
    std::nth_element(a.begin(), mid, a.end());
    double med = *mid;
    if (a.size() % 2 == 0) {
        auto lo = std::max_element(a.begin(), mid);
        med = 0.5 * (med + *lo);
    }
    return med / 0.6744897501960817;
}

}  // namespace detail

// Iteratively reweighted least squares with Huber weights. Scale is
// re-estimated each iteration from the MAD of the residuals.
inline RobustFit huber_irls(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                            double tuning = 1.345, int max_iter = 50, double tol = 1e-8) {
    RobustFit fit;
    Eigen::VectorXd beta;
    try {
        beta = ols(X, y).beta;
    } catch (const CollinearError&) {
        beta = ridge_solve(X, y);
    }
    Eigen::VectorXd w(X.rows());
    for (int it = 1; it <= max_iter; ++it) {
        fit.iterations = it;
        Eigen::VectorXd resid = y - X * beta;
        double scale = detail::mad_scale(resid);
        if (scale < 1e-12 * (1.0 + std::fabs(resid.cwiseAbs().maxCoeff()))) {
            fit.converged = true;  // essentially exact fit
            break;
        }
        for (Eigen::Index i = 0; i < resid.size(); ++i) {
            double z = std::fabs(resid[i]) / scale;
            w[i] = z <= tuning ? 1.0 : tuning / z;
        }
        Eigen::MatrixXd Xw = w.asDiagonal() * X;
        Eigen::VectorXd next = (X.transpose() * Xw)
                                   .ldlt()
                                   .solve(X.transpose() * (w.asDiagonal() * y));
        double delta = (next - beta).cwiseAbs().maxCoeff();
        beta = next;
        if (delta < tol * (1.0 + beta.cwiseAbs().maxCoeff())) {
            fit.converged = true;
            break;
        }
    }
    fit.beta = beta;
    fit.residuals = y - X * beta;
    return fit;
}

inline double mean_of(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

inline double sample_variance(const std::vector<double>& x) {
    if (x.size() < 2) return 0.0;
    double m = mean_of(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

// Pearson r of two equal-length vectors; throws if either is constant.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DomainError("pearson: length mismatch");
    if (x.size() < 2) throw SampleSizeError("pearson: need at least 2 points");
    double mx = mean_of(x), my = mean_of(y);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) throw DegenerateError("pearson: constant series");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace causalpanel
