#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "causalpanel/csv.hpp"
#include "causalpanel/detail/adf_table_data.hpp"
#include "causalpanel/linreg.hpp"
#include "causalpanel/panel.hpp"
#include "causalpanel/special.hpp"

namespace causalpanel {

// ---------------------------------------------------------------------------
// Shapiro-Wilk
// ---------------------------------------------------------------------------

struct NormalityResult {
    double w_statistic = 0.0;
    double p_value = 0.0;
    int n = 0;
};

// W statistic and p-value via Royston's polynomial approximation (AS R94)
// to the normal order-statistic weights, valid for 3 <= n <= 5000.
inline NormalityResult shapiro_wilk(std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    if (n < 3 || n > 5000) throw SampleSizeError("shapiro_wilk: n must be in [3, 5000]");

    std::vector<double> s(x.begin(), x.end());
    std::sort(s.begin(), s.end());
    if (s.front() == s.back())
        throw DegenerateError("shapiro_wilk: all sample values are equal");

    std::vector<double> m(n);
    double ssm = 0.0;
    for (int i = 0; i < n; ++i) {
        m[i] = norm_quantile((i + 1 - 0.375) / (n + 0.25));
        ssm += m[i] * m[i];
    }

    std::vector<double> a(n);
    const double rsn = 1.0 / std::sqrt(static_cast<double>(n));
    if (n == 3) {
        a[0] = -std::numbers::sqrt2 / 2.0;
        a[1] = 0.0;
        a[2] = -a[0];
    } else {
        double an = m[n - 1] / std::sqrt(ssm) +
                    rsn * (-2.706056 * std::pow(rsn, 4) + 4.434685 * std::pow(rsn, 3) -
                           2.071190 * rsn * rsn - 0.147981 * rsn + 0.221157);
        if (n > 5) {
            double an1 = m[n - 2] / std::sqrt(ssm) +
                         rsn * (-3.582633 * std::pow(rsn, 4) + 5.682633 * std::pow(rsn, 3) -
                                1.752461 * rsn * rsn - 0.293762 * rsn + 0.042981);
            double phi = (ssm - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                         (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
            a[n - 1] = an;
            a[n - 2] = an1;
            a[0] = -an;
            a[1] = -an1;
            for (int i = 2; i < n - 2; ++i) a[i] = m[i] / std::sqrt(phi);
        } else {
            double phi = (ssm - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
            a[n - 1] = an;
            a[0] = -an;
            for (int i = 1; i < n - 1; ++i) a[i] = m[i] / std::sqrt(phi);
        }
    }

    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += a[i] * s[i];
        den += (s[i] - mean) * (s[i] - mean);
    }
    if (den <= 0.0) throw DegenerateError("shapiro_wilk: zero variance");
    double w = num * num / den;
    w = std::min(w, 1.0);

    double p;
    if (n == 3) {
        constexpr double pi6 = 6.0 / std::numbers::pi;
        constexpr double stqr = 1.047197551196598;  // asin(sqrt(3/4))
        p = pi6 * (std::asin(std::sqrt(w)) - stqr);
        p = std::clamp(p, 0.0, 1.0);
    } else if (n <= 11) {
        double g = -2.273 + 0.459 * n;
        double arg = g - std::log1p(-w);
        if (arg <= 0.0) return {w, 0.0, n};  // beyond the approximation's reach
        double lw = -std::log(arg);
        double mu = 0.5440 - 0.39978 * n + 0.025054 * n * n - 0.0006714 * n * n * n;
        double sigma = std::exp(1.3822 - 0.77857 * n + 0.062767 * n * n - 0.0020322 * n * n * n);
        p = norm_sf((lw - mu) / sigma);
    } else {
        double ln = std::log(static_cast<double>(n));
        double lw = std::log1p(-w);
        double mu = 0.0038915 * ln * ln * ln - 0.083751 * ln * ln - 0.31082 * ln - 1.5861;
        double sigma = std::exp(0.0030302 * ln * ln - 0.082676 * ln - 0.4803);
        p = norm_sf((lw - mu) / sigma);
    }
    return {w, std::clamp(p, 0.0, 1.0), n};
}

// ---------------------------------------------------------------------------
// Normality transform search
// ---------------------------------------------------------------------------

enum class TransformKind { none, log_shift, signed_power, exp_standardized };

struct TransformTag {
    TransformKind kind = TransformKind::none;
    double lambda = 1.0;  // exponent for signed_power; shift for log_shift

    bool operator==(const TransformTag&) const = default;
};

inline std::string to_string(const TransformTag& t) {
    switch (t.kind) {
        case TransformKind::none: return "none";
        case TransformKind::log_shift: return "log";
        case TransformKind::signed_power: {
            std::ostringstream os;
            os << "power(" << t.lambda << ")";
            return os.str();
        }
        case TransformKind::exp_standardized: return "exp_std";
    }
    return "?";
}

struct ToNormalResult {
    std::vector<double> y;
    TransformTag tag;
    std::optional<double> w_before;
    std::optional<double> w_after;
    bool normal = false;  // Shapiro-Wilk p >= 0.05 on the returned series
};

// Score a family of monotone transforms by Shapiro-Wilk W and return the
// winner; identity wins ties (tolerance 1e-9), so W never decreases.
inline ToNormalResult to_normal(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 3) throw SampleSizeError("to_normal: need n >= 3");

    auto sw_or_nothing = [](const std::vector<double>& v) -> std::optional<NormalityResult> {
        for (double e : v)
            if (!std::isfinite(e)) return std::nullopt;
        try {
            return shapiro_wilk(v);
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    std::vector<double> ident(x.begin(), x.end());
    auto base = sw_or_nothing(ident);

    struct Candidate {
        std::vector<double> y;
        TransformTag tag;
        double w;
    };
    std::vector<Candidate> cands;

    double lo = *std::min_element(x.begin(), x.end());
    double hi = *std::max_element(x.begin(), x.end());
    double range = hi - lo;

    // log, shifted into positive territory when needed
    if (range > 0.0) {
        double shift = lo > 0.0 ? 0.0 : -lo + 0.001 * range;
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = std::log(x[i] + shift);
        if (auto r = sw_or_nothing(y))
            cands.push_back({std::move(y), {TransformKind::log_shift, shift}, r->w_statistic});
    }

    for (double lambda : {-2.0, -1.0, -0.5, 0.5, 2.0}) {
        bool ok = true;
        if (lambda < 0.0)
            for (double v : x)
                if (std::fabs(v) < 1e-300) ok = false;
        if (!ok) continue;
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double sign = x[i] < 0.0 ? -1.0 : 1.0;
            y[i] = sign * std::pow(std::fabs(x[i]), lambda);
        }
        if (auto r = sw_or_nothing(y))
            cands.push_back({std::move(y), {TransformKind::signed_power, lambda}, r->w_statistic});
    }

    {
        double mu = mean_of(ident);
        double sdv = std::sqrt(sample_variance(ident));
        if (sdv > 0.0) {
            std::vector<double> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = std::exp((x[i] - mu) / sdv);
            if (auto r = sw_or_nothing(y))
                cands.push_back(
                    {std::move(y), {TransformKind::exp_standardized, 1.0}, r->w_statistic});
        }
    }

    ToNormalResult out;
    out.w_before = base ? std::optional<double>(base->w_statistic) : std::nullopt;

    const Candidate* best = nullptr;
    for (const auto& c : cands)
        if (!best || c.w > best->w) best = &c;

    double w_ident = base ? base->w_statistic : -1.0;
    if (best && best->w > w_ident + 1e-9) {
        out.y = best->y;
        out.tag = best->tag;
        out.w_after = best->w;
    } else {
        out.y = std::move(ident);
        out.tag = {TransformKind::none, 1.0};
        out.w_after = out.w_before;
    }
    if (out.w_after) {
        try {
            out.normal = shapiro_wilk(out.y).p_value >= 0.05;
        } catch (const Error&) {
            out.normal = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Augmented Dickey-Fuller
// ---------------------------------------------------------------------------

enum class AdfKind { none, constant, constant_trend };

inline AdfKind adf_kind_from_string(const std::string& s) {
    if (s == "none" || s == "n") return AdfKind::none;
    if (s == "constant" || s == "c") return AdfKind::constant;
    if (s == "constant_trend" || s == "ct") return AdfKind::constant_trend;
    throw DomainError("unknown ADF regression kind '" + s + "'");
}

inline std::string to_string(AdfKind k) {
    switch (k) {
        case AdfKind::none: return "none";
        case AdfKind::constant: return "constant";
        case AdfKind::constant_trend: return "constant_trend";
    }
    return "?";
}

// tau -> p interpolation table; built-in data is generated from the
// versioned asset file (assets/adf_pvalues.txt) and must stay identical
// to it. load_adf_table() reads the asset layout at runtime.
struct AdfPvalueTable {
    double tau_start = detail::kAdfTauStart;
    double tau_step = detail::kAdfTauStep;
    std::vector<double> none_, const_, const_trend_;

    static const AdfPvalueTable& builtin() {
        static const AdfPvalueTable t = [] {
            AdfPvalueTable tb;
            tb.none_.assign(detail::kAdfPvaluesNone.begin(), detail::kAdfPvaluesNone.end());
            tb.const_.assign(detail::kAdfPvaluesConst.begin(), detail::kAdfPvaluesConst.end());
            tb.const_trend_.assign(detail::kAdfPvaluesConstTrend.begin(),
                                   detail::kAdfPvaluesConstTrend.end());
            return tb;
        }();
        return t;
    }

    double lookup(double tau, AdfKind kind) const {
        const std::vector<double>* v = nullptr;
        switch (kind) {
            case AdfKind::none: v = &none_; break;
            case AdfKind::constant: v = &const_; break;
            case AdfKind::constant_trend: v = &const_trend_; break;
        }
        if (!v || v->empty()) throw Error("ADF p-value table not loaded");
        double pos = (tau - tau_start) / tau_step;
        if (pos <= 0.0) return v->front();
        if (pos >= static_cast<double>(v->size() - 1)) return v->back();
        auto i = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(i);
        return (*v)[i] * (1.0 - frac) + (*v)[i + 1] * frac;
    }
};

inline AdfPvalueTable load_adf_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ADF table: " + path);
    AdfPvalueTable t;
    t.none_.clear();
    std::string line;
    std::vector<double>* cur = nullptr;
    int count = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string tok;
        is >> tok;
        if (tok == "grid") {
            is >> t.tau_start >> t.tau_step >> count;
        } else if (tok == "kind") {
            std::string k;
            is >> k;
            if (k == "n") cur = &t.none_;
            else if (k == "c") cur = &t.const_;
            else if (k == "ct") cur = &t.const_trend_;
            else throw ParseError("unknown kind '" + k + "' in ADF table", lineno);
        } else {
            if (!cur) throw ParseError("value before 'kind' in ADF table", lineno);
            cur->push_back(csv::parse_double(tok, lineno));
        }
    }
    for (auto* v : {&t.none_, &t.const_, &t.const_trend_})
        if (static_cast<int>(v->size()) != count)
            throw Error("ADF table block size mismatch in " + path);
    return t;
}

struct AdfResult {
    double tau = 0.0;
    double p_value = 1.0;
    int lags_used = 0;
    AdfKind regression_kind = AdfKind::constant;
};

enum class LagSelection { aic, fixed };

// Conventional Schwert-style lag cap, bounded so the regression keeps
// enough observations.
inline int adf_default_max_lag(int n) {
    int cap = static_cast<int>(std::floor(std::cbrt(static_cast<double>(n - 1))));
    return std::max(0, std::min(cap, n - 10));
}

namespace detail {

struct AdfDesign {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
};

// rows t run over the last (n - lag - 1) observations; columns are
// [level lag, diff lags 1..p, const, trend] in that order
inline AdfDesign adf_design(std::span<const double> x, int p, AdfKind kind, int nobs) {
    const int n = static_cast<int>(x.size());
    int ndet = kind == AdfKind::none ? 0 : (kind == AdfKind::constant ? 1 : 2);
    AdfDesign d;
    d.X.resize(nobs, 1 + p + ndet);
    d.y.resize(nobs);
    int t0 = n - nobs;  // first response index (on x, response is x[t]-x[t-1])
    for (int r = 0; r < nobs; ++r) {
        int t = t0 + r;
        d.y[r] = x[t] - x[t - 1];
        d.X(r, 0) = x[t - 1];
        for (int j = 1; j <= p; ++j) d.X(r, j) = x[t - j] - x[t - j - 1];
        if (ndet >= 1) d.X(r, 1 + p) = 1.0;
        if (ndet == 2) d.X(r, 2 + p) = static_cast<double>(r + 1);
    }
    return d;
}

}  // namespace detail

// Dickey-Fuller tau on Delta(y_t) = [c + bt] + gamma*y_{t-1} + sum d_i
// Delta(y_{t-i}) + e, with the lag order chosen by minimum AIC over a
// common estimation sample (the fixed mode uses max_lag directly).
// p-value by interpolation of the embedded table.
inline AdfResult adf(std::span<const double> x, int max_lag, AdfKind kind,
                     LagSelection select = LagSelection::aic,
                     const AdfPvalueTable& table = AdfPvalueTable::builtin()) {
    const int n = static_cast<int>(x.size());
    if (max_lag < 0) throw DomainError("adf: max_lag must be >= 0");
    if (n < 10 + max_lag) throw SampleSizeError("adf: sample too small for max_lag");

    int used = max_lag;
    if (select == LagSelection::aic && max_lag > 0) {
        const int nobs = n - max_lag - 1;
        auto full = detail::adf_design(x, max_lag, kind, nobs);
        double best_aic = std::numeric_limits<double>::infinity();
        int best_p = -1;
        for (int p = 0; p <= max_lag; ++p) {
            // columns: level lag + p diff lags + deterministic terms
            Eigen::MatrixXd Xp(nobs, full.X.cols() - (max_lag - p));
            Xp.leftCols(1 + p) = full.X.leftCols(1 + p);
            int ndet = static_cast<int>(full.X.cols()) - 1 - max_lag;
            if (ndet > 0) Xp.rightCols(ndet) = full.X.rightCols(ndet);
            try {
                double aic = ols(Xp, full.y).aic();
                if (aic < best_aic) {
                    best_aic = aic;
                    best_p = p;
                }
            } catch (const CollinearError&) {
                continue;  // candidate unusable, not fatal
            }
        }
        if (best_p < 0) throw CollinearError("adf: all lag candidates are singular");
        used = best_p;
    }

    const int nobs = n - used - 1;
    auto design = detail::adf_design(x, used, kind, nobs);
    OlsFit fit = ols(design.X, design.y);  // throws CollinearError when singular

    double tau;
    if (fit.ssr <= 1e-300) {
        // residual-free fit: no information about gamma's dispersion
        tau = std::fabs(fit.beta[0]) < 1e-10 ? 0.0
                                             : std::copysign(1e10, fit.beta[0]);
    } else {
        Eigen::VectorXd se = ols_se(design.X, fit);
        if (se[0] <= 0.0) throw CollinearError("adf: zero standard error for gamma");
        tau = fit.beta[0] / se[0];
    }
    return {tau, table.lookup(tau, kind), used, kind};
}

struct StationarizeResult {
    std::vector<double> y;
    int diff_order = 0;
    bool stationary = false;
    std::vector<std::string> warnings;
};

inline std::vector<double> difference(std::span<const double> x) {
    std::vector<double> d;
    for (std::size_t i = 1; i < x.size(); ++i) d.push_back(x[i] - x[i - 1]);
    return d;
}

// ADF-test / difference loop, capped at two differences.
inline StationarizeResult stationarize(std::span<const double> x,
                                       AdfKind kind = AdfKind::constant,
                                       double alpha = 0.05) {
    if (x.size() < 12) throw SampleSizeError("stationarize: need n >= 12");
    StationarizeResult res;
    res.y.assign(x.begin(), x.end());
    for (int d = 0; d <= 2; ++d) {
        res.diff_order = d;
        int n = static_cast<int>(res.y.size());
        if (n < 10) {
            res.stationary = false;
            res.warnings.push_back("series too short to retest at diff order " +
                                   std::to_string(d));
            return res;
        }
        try {
            AdfResult r = adf(res.y, adf_default_max_lag(n), kind);
            res.stationary = r.p_value < alpha;
        } catch (const DegenerateError& e) {
            res.stationary = false;
            res.warnings.push_back(std::string("degenerate at diff order ") +
                                   std::to_string(d) + ": " + e.what());
            return res;
        } catch (const CollinearError& e) {
            res.stationary = false;
            res.warnings.push_back(std::string("collinear at diff order ") +
                                   std::to_string(d) + ": " + e.what());
            return res;
        }
        if (res.stationary || d == 2) return res;
        res.y = difference(res.y);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Pearson correlation and pruning
// ---------------------------------------------------------------------------

struct PearsonResult {
    std::vector<std::string> names;  // non-constant variables, input order
    std::vector<std::vector<double>> r;
    std::vector<std::string> excluded;  // constant variables
};

inline PearsonResult pearson_matrix(const VariableSet& vs) {
    PearsonResult out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vs.n_vars(); ++i) {
        if (sample_variance(vs.cols[i]) > 0.0) {
            keep.push_back(i);
            out.names.push_back(vs.names[i]);
        } else {
            out.excluded.push_back(vs.names[i]);
        }
    }
    const std::size_t k = keep.size();
    out.r.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t a = 0; a < k; ++a) {
        out.r[a][a] = 1.0;
        for (std::size_t b = a + 1; b < k; ++b) {
            double v = pearson(vs.cols[keep[a]], vs.cols[keep[b]]);
            out.r[a][b] = v;
            out.r[b][a] = v;
        }
    }
    return out;
}

struct PruneResult {
    VariableSet vs;
    std::vector<std::string> dropped;
    std::vector<std::string> warnings;
};

// Greedy |r| >= threshold pruning: the later-indexed member of an offending
// pair is dropped unless protected. Deterministic in the input order.
inline PruneResult prune_correlated(const VariableSet& vs, double threshold,
                                    const std::set<std::string>& protected_names) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw DomainError("prune_correlated: threshold must be in (0,1]");
    const std::size_t k = vs.n_vars();
    std::vector<bool> alive(k, true);
    PruneResult out;

    auto corr_or_nan = [&](std::size_t a, std::size_t b) {
        try {
            return pearson(vs.cols[a], vs.cols[b]);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    auto is_protected = [&](std::size_t i) { return protected_names.count(vs.names[i]) > 0; };

    for (std::size_t i = 0; i < k; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!alive[j]) continue;
            double r = corr_or_nan(i, j);
            if (std::isnan(r) || std::fabs(r) < threshold) continue;
            if (!is_protected(j)) {
                alive[j] = false;
            } else if (!is_protected(i)) {
                alive[i] = false;
                break;  // row i is gone
            } else {
                out.warnings.push_back("pair (" + vs.names[i] + ", " + vs.names[j] +
                                       ") exceeds threshold but both are protected");
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (alive[i]) {
            out.vs.names.push_back(vs.names[i]);
            out.vs.cols.push_back(vs.cols[i]);
        } else {
            out.dropped.push_back(vs.names[i]);
        }
    }
    return out;
}

}  // namespace causalpanel
