#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "causalpanel/linreg.hpp"
#include "causalpanel/panel.hpp"
#include "causalpanel/rng.hpp"

namespace causalpanel {

enum class ImputeMethod { random, knn, msreg };

inline std::string to_string(ImputeMethod m) {
    switch (m) {
        case ImputeMethod::random: return "random";
        case ImputeMethod::knn: return "knn";
        case ImputeMethod::msreg: return "msreg";
    }
    return "?";
}

inline ImputeMethod impute_method_from_string(const std::string& s) {
    if (s == "random") return ImputeMethod::random;
    if (s == "knn") return ImputeMethod::knn;
    if (s == "msreg") return ImputeMethod::msreg;
    throw DomainError("unknown imputation method '" + s + "'");
}

struct BoolMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> data;

    BoolMatrix() = default;
    BoolMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    bool get(std::size_t r, std::size_t c) const { return data[r * cols + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v) { data[r * cols + c] = v ? 1 : 0; }
    std::size_t count() const {
        std::size_t n = 0;
        for (auto v : data) n += v;
        return n;
    }
    bool operator==(const BoolMatrix&) const = default;
};

struct ImputedPanel {
    CountryPanel panel;  // complete
    ImputeMethod method = ImputeMethod::random;
    BoolMatrix imputed_mask;  // exactly the cells that were missing
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
    int noise_clamp_events = 0;  // msreg only
};

namespace detail {

inline BoolMatrix missing_mask(const CountryPanel& p) {
    BoolMatrix m(p.n_indicators(), p.n_years());
    for (std::size_t i = 0; i < p.n_indicators(); ++i)
        for (std::size_t y = 0; y < p.n_years(); ++y)
            m.set(i, y, !p.values.observed(i, y));
    return m;
}

}  // namespace detail

// Each missing cell gets a uniform draw from the indicator's observed values.
inline ImputedPanel impute_random(const CountryPanel& panel, std::uint64_t seed) {
    ImputedPanel out;
    out.panel = panel;
    out.method = ImputeMethod::random;
    out.seed = seed;
    out.imputed_mask = detail::missing_mask(panel);

    Rng rng(seed);
    for (std::size_t i = 0; i < panel.n_indicators(); ++i) {
        bool row_has_missing = false;
        for (std::size_t y = 0; y < panel.n_years(); ++y)
            if (!panel.values.observed(i, y)) row_has_missing = true;
        if (!row_has_missing) continue;
        auto donors = panel.observed_values(i);
        if (donors.empty())
            throw DegenerateError("impute_random: indicator '" + panel.indicator_names[i] +
                                  "' has no observed values");
        for (std::size_t y = 0; y < panel.n_years(); ++y)
            if (!panel.values.observed(i, y))
                out.panel.values.set(i, y, donors[rng.uniform_index(donors.size())]);
    }
    return out;
}

// Year-column KNN: a year with missing entries borrows from the k nearest
// year-columns (Euclidean over mutually observed coordinates, scaled by
// sqrt(dim/overlap)); donors must observe the missing indicator.
inline ImputedPanel impute_knn(const CountryPanel& panel, int k, std::uint64_t seed) {
    if (k < 1) throw DomainError("impute_knn: k must be >= 1");
    ImputedPanel out;
    out.panel = panel;
    out.method = ImputeMethod::knn;
    out.seed = seed;
    out.imputed_mask = detail::missing_mask(panel);

    const std::size_t ni = panel.n_indicators();
    const std::size_t ny = panel.n_years();
    const double dim = static_cast<double>(ni);

    for (std::size_t target = 0; target < ny; ++target) {
        std::vector<std::size_t> missing_rows;
        for (std::size_t i = 0; i < ni; ++i)
            if (!panel.values.observed(i, target)) missing_rows.push_back(i);
        if (missing_rows.empty()) continue;

        // distance from target year to every other year
        std::vector<std::pair<double, std::size_t>> dist;  // (distance, year)
        for (std::size_t other = 0; other < ny; ++other) {
            if (other == target) continue;
            double ss = 0.0;
            std::size_t overlap = 0;
            for (std::size_t i = 0; i < ni; ++i) {
                if (panel.values.observed(i, target) && panel.values.observed(i, other)) {
                    double d = panel.values.value(i, target) - panel.values.value(i, other);
                    ss += d * d;
                    ++overlap;
                }
            }
            if (overlap == 0) continue;  // no common coordinates, not a candidate
            dist.emplace_back(std::sqrt(ss * dim / static_cast<double>(overlap)), other);
        }
        std::stable_sort(dist.begin(), dist.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        for (std::size_t i : missing_rows) {
            std::vector<double> donated;
            for (const auto& [d, year] : dist) {
                if (!panel.values.observed(i, year)) continue;
                donated.push_back(panel.values.value(i, year));
                if (donated.size() == static_cast<std::size_t>(k)) break;
            }
            if (donated.empty()) {
                auto obs = panel.observed_values(i);
                if (obs.empty())
                    throw DegenerateError("impute_knn: indicator '" + panel.indicator_names[i] +
                                          "' has no observed values");
                out.panel.values.set(i, target, mean_of(obs));
                out.warnings.push_back("knn: no donor observes '" + panel.indicator_names[i] +
                                       "' for year " +
                                       std::to_string(panel.years.first + static_cast<int>(target)) +
                                       "; used indicator mean");
            } else {
                out.panel.values.set(i, target, mean_of(donated));
            }
        }
    }
    return out;
}

// Stochastic multiple-regression imputation. Per indicator with missing
// cells: regress its standardized values on all other standardized
// indicators over complete-case years, predict the missing cells, and add
// a standard-normal draw scaled by sqrt(1 - sum_j beta_j * corr_ij), the
// residual scale implied by the fitted coefficients. De-standardized back
// to original units afterwards.
inline ImputedPanel impute_msreg(const CountryPanel& panel, std::uint64_t seed) {
    const std::size_t ni = panel.n_indicators();
    const std::size_t ny = panel.n_years();
    if (ni < 2) throw DomainError("impute_msreg: need at least 2 indicators");

    ImputedPanel out;
    out.panel = panel;
    out.method = ImputeMethod::msreg;
    out.seed = seed;
    out.imputed_mask = detail::missing_mask(panel);

    std::vector<double> mean(ni), sd(ni);
    for (std::size_t i = 0; i < ni; ++i) {
        auto obs = panel.observed_values(i);
        if (obs.size() < 3)
            throw DegenerateError("impute_msreg: indicator '" + panel.indicator_names[i] +
                                  "' has fewer than 3 observed values");
        mean[i] = mean_of(obs);
        sd[i] = std::sqrt(sample_variance(obs));
    }

    auto zvalue = [&](std::size_t i, std::size_t y) {
        // standardized observed value; missing or zero-variance maps to 0 (the mean)
        if (!panel.values.observed(i, y) || sd[i] <= 0.0) return 0.0;
        return (panel.values.value(i, y) - mean[i]) / sd[i];
    };

    std::vector<std::size_t> complete_rows;
    for (std::size_t y = 0; y < ny; ++y) {
        bool all = true;
        for (std::size_t i = 0; i < ni && all; ++i) all = panel.values.observed(i, y);
        if (all) complete_rows.push_back(y);
    }
    if (complete_rows.empty())
        out.warnings.push_back("msreg: no complete-case years; predictions fall back to the mean");

    Rng rng(seed);
    for (std::size_t i = 0; i < ni; ++i) {
        std::vector<std::size_t> missing_years;
        for (std::size_t y = 0; y < ny; ++y)
            if (!panel.values.observed(i, y)) missing_years.push_back(y);
        if (missing_years.empty()) continue;

        const std::size_t np = ni - 1;  // predictors
        std::vector<std::size_t> predictors;
        for (std::size_t j = 0; j < ni; ++j)
            if (j != i) predictors.push_back(j);

        Eigen::VectorXd beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(np));
        std::vector<double> corr(np, 0.0);
        if (!complete_rows.empty()) {
            Eigen::MatrixXd X(static_cast<Eigen::Index>(complete_rows.size()),
                              static_cast<Eigen::Index>(np));
            Eigen::VectorXd yv(static_cast<Eigen::Index>(complete_rows.size()));
            for (std::size_t r = 0; r < complete_rows.size(); ++r) {
                yv[static_cast<Eigen::Index>(r)] = zvalue(i, complete_rows[r]);
                for (std::size_t j = 0; j < np; ++j)
                    X(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
                        zvalue(predictors[j], complete_rows[r]);
            }
            if (complete_rows.size() <= np) {
                beta = ridge_solve(X, yv);
                out.warnings.push_back("msreg: underdetermined regression for '" +
                                       panel.indicator_names[i] + "'; ridge fallback");
            } else {
                try {
                    beta = ols(X, yv).beta;
                } catch (const CollinearError&) {
                    beta = ridge_solve(X, yv);
                    out.warnings.push_back("msreg: singular regression for '" +
                                           panel.indicator_names[i] + "'; ridge fallback");
                }
            }
            // sample correlation between x_i and each predictor on the same rows
            for (std::size_t j = 0; j < np; ++j) {
                std::vector<double> a, b;
                for (std::size_t r : complete_rows) {
                    a.push_back(zvalue(i, r));
                    b.push_back(zvalue(predictors[j], r));
                }
                try {
                    corr[j] = pearson(a, b);
                } catch (const Error&) {
                    corr[j] = 0.0;
                }
            }
        }

        double scale_sq = 1.0;
        for (std::size_t j = 0; j < np; ++j)
            scale_sq -= beta[static_cast<Eigen::Index>(j)] * corr[j];
        if (scale_sq < 0.0) {
            scale_sq = 0.0;
            ++out.noise_clamp_events;
            out.warnings.push_back("msreg: noise scale clamped to 0 for '" +
                                   panel.indicator_names[i] + "' (collinearity artifact)");
        }
        double scale = std::sqrt(scale_sq);

        for (std::size_t y : missing_years) {
            double pred = 0.0;
            for (std::size_t j = 0; j < np; ++j)
                pred += beta[static_cast<Eigen::Index>(j)] * zvalue(predictors[j], y);
            double z = pred + scale * rng.normal();
            out.panel.values.set(i, y, mean[i] + sd[i] * z);
        }
    }
    return out;
}

inline ImputedPanel impute(const CountryPanel& panel, ImputeMethod method, int knn_k,
                           std::uint64_t seed) {
    switch (method) {
        case ImputeMethod::random: return impute_random(panel, seed);
        case ImputeMethod::knn: return impute_knn(panel, knn_k, seed);
        case ImputeMethod::msreg: return impute_msreg(panel, seed);
    }
    throw DomainError("impute: bad method");
}

struct DriftReport {
    std::map<std::string, double> variance_delta;
    double covariance_frobenius_delta = 0.0;
    double correlation_max_abs_delta = 0.0;  // in [0, 2]
};

// Distribution shift introduced by imputation: per-indicator variance
// change, and covariance/correlation change against the complete-case
// submatrix of the source panel.
inline DriftReport drift(const CountryPanel& before, const ImputedPanel& after) {
    const std::size_t ni = before.n_indicators();
    const std::size_t ny = before.n_years();
    if (after.panel.n_indicators() != ni || after.panel.n_years() != ny)
        throw DomainError("drift: shape mismatch");

    DriftReport rep;
    for (std::size_t i = 0; i < ni; ++i) {
        std::vector<double> obs = before.observed_values(i);
        std::vector<double> full;
        for (std::size_t y = 0; y < ny; ++y) full.push_back(after.panel.values.value(i, y));
        rep.variance_delta[before.indicator_names[i]] =
            sample_variance(full) - sample_variance(obs);
    }

    std::vector<std::size_t> complete_rows;
    for (std::size_t y = 0; y < ny; ++y) {
        bool all = true;
        for (std::size_t i = 0; i < ni && all; ++i) all = before.values.observed(i, y);
        if (all) complete_rows.push_back(y);
    }
    if (complete_rows.size() < 2) return rep;  // nothing comparable

    auto column = [&](const CountryPanel& p, std::size_t i,
                      const std::vector<std::size_t>* rows) {
        std::vector<double> v;
        if (rows) {
            for (std::size_t y : *rows) v.push_back(p.values.value(i, y));
        } else {
            for (std::size_t y = 0; y < ny; ++y) v.push_back(p.values.value(i, y));
        }
        return v;
    };
    auto cov = [](const std::vector<double>& a, const std::vector<double>& b) {
        double ma = mean_of(a), mb = mean_of(b), s = 0.0;
        for (std::size_t t = 0; t < a.size(); ++t) s += (a[t] - ma) * (b[t] - mb);
        return s / static_cast<double>(a.size() - 1);
    };

    double fro = 0.0, max_corr = 0.0;
    for (std::size_t i = 0; i < ni; ++i) {
        auto bi = column(before, i, &complete_rows);
        auto ai = column(after.panel, i, nullptr);
        for (std::size_t j = 0; j < ni; ++j) {
            auto bj = column(before, j, &complete_rows);
            auto aj = column(after.panel, j, nullptr);
            double d = cov(ai, aj) - cov(bi, bj);
            fro += d * d;
            if (i < j) {
                try {
                    double rc = pearson(ai, aj) - pearson(bi, bj);
                    max_corr = std::max(max_corr, std::fabs(rc));
                } catch (const Error&) {
                    // constant on either side: correlation undefined, skip pair
                }
            }
        }
    }
    rep.covariance_frobenius_delta = std::sqrt(fro);
    rep.correlation_max_abs_delta = max_corr;
    return rep;
}

}  // namespace causalpanel
