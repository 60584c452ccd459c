#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "causalpanel/linreg.hpp"
#include "causalpanel/panel.hpp"
#include "causalpanel/special.hpp"

namespace causalpanel {

struct GrangerPairResult {
    double p_value = 1.0;
    int best_lag = 0;
};

// F-test of "x Granger-causes y": for each lag L, compare OLS of y on its
// own L lags against the fit with L lags of x added, F on the SSR drop
// with (L, nobs - 2L - 1) dof. Returns the minimum p over lags 1..max_lag.
inline GrangerPairResult granger_pair(std::span<const double> x, std::span<const double> y,
                                      int max_lag) {
    const int n = static_cast<int>(y.size());
    if (static_cast<int>(x.size()) != n) throw DomainError("granger_pair: length mismatch");
    if (max_lag < 1) throw DomainError("granger_pair: max_lag must be >= 1");
    if (n < 5 * max_lag + 5) throw SampleSizeError("granger_pair: series too short for max_lag");

    auto constant = [](std::span<const double> v) {
        for (double e : v)
            if (e != v[0]) return false;
        return true;
    };
    if (constant(x) || constant(y)) throw DegenerateError("granger_pair: constant series");

    GrangerPairResult best;
    best.p_value = 2.0;  // sentinel above any real p
    for (int lag = 1; lag <= max_lag; ++lag) {
        const int nobs = n - lag;
        Eigen::MatrixXd Xr(nobs, 1 + lag);
        Eigen::MatrixXd Xu(nobs, 1 + 2 * lag);
        Eigen::VectorXd yv(nobs);
        for (int r = 0; r < nobs; ++r) {
            int t = lag + r;
            yv[r] = y[t];
            Xr(r, 0) = 1.0;
            Xu(r, 0) = 1.0;
            for (int j = 1; j <= lag; ++j) {
                Xr(r, j) = y[t - j];
                Xu(r, j) = y[t - j];
                Xu(r, lag + j) = x[t - j];
            }
        }
        int df_denom = nobs - 2 * lag - 1;
        if (df_denom <= 0) throw SampleSizeError("granger_pair: no residual dof at lag");

        OlsFit restricted = ols(Xr, yv);
        OlsFit unrestricted = ols(Xu, yv);
        double p;
        if (unrestricted.ssr <= 1e-300 * std::max(1.0, restricted.ssr)) {
            p = 0.0;  // perfect predictability
        } else {
            double f = ((restricted.ssr - unrestricted.ssr) / lag) /
                       (unrestricted.ssr / df_denom);
            f = std::max(f, 0.0);
            p = f_sf(f, lag, df_denom);
        }
        if (p < best.p_value) {
            best.p_value = p;
            best.best_lag = lag;
        }
    }
    return best;
}

struct CausalityMatrix {
    std::vector<std::string> variables;
    std::vector<std::vector<double>> p;        // row = effect, column = cause
    std::vector<std::vector<int>> best_lag;    // lag attaining the reported p
    int max_lag = 0;
    double alpha = 0.05;
    std::vector<std::string> warnings;
};

// Pairwise grid over all ordered pairs. Pairs that cannot be tested
// (degenerate or collinear) degrade to p = 1 with a warning.
inline CausalityMatrix causality_matrix(const VariableSet& vs, int max_lag, double alpha) {
    const std::size_t k = vs.n_vars();
    CausalityMatrix m;
    m.variables = vs.names;
    m.max_lag = max_lag;
    m.alpha = alpha;
    m.p.assign(k, std::vector<double>(k, 1.0));
    m.best_lag.assign(k, std::vector<int>(k, 0));
    for (std::size_t effect = 0; effect < k; ++effect) {
        for (std::size_t cause = 0; cause < k; ++cause) {
            if (effect == cause) continue;  // diagonal stays 1
            try {
                auto r = granger_pair(vs.cols[cause], vs.cols[effect], max_lag);
                m.p[effect][cause] = r.p_value;
                m.best_lag[effect][cause] = r.best_lag;
            } catch (const Error& e) {
                m.warnings.push_back("pair (" + vs.names[cause] + " -> " + vs.names[effect] +
                                     "): " + e.what());
            }
        }
    }
    return m;
}

struct GrangerEdge {
    std::string cause;
    std::string effect;
    double p_value = 1.0;
    int lag = 0;

    bool operator==(const GrangerEdge&) const = default;
};

struct GrangerEdges {
    std::vector<GrangerEdge> all;
    std::vector<GrangerEdge> label_incident;  // either endpoint is the label
};

inline GrangerEdges extract_edges(const CausalityMatrix& m) {
    GrangerEdges out;
    for (std::size_t effect = 0; effect < m.variables.size(); ++effect) {
        for (std::size_t cause = 0; cause < m.variables.size(); ++cause) {
            if (effect == cause) continue;
            if (m.p[effect][cause] < m.alpha) {
                GrangerEdge e{m.variables[cause], m.variables[effect], m.p[effect][cause],
                              m.best_lag[effect][cause]};
                out.all.push_back(e);
                if (e.cause == kLabelName || e.effect == kLabelName)
                    out.label_incident.push_back(e);
            }
        }
    }
    return out;
}

}  // namespace causalpanel
