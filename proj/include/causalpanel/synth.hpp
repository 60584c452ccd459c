#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "causalpanel/icstar.hpp"
#include "causalpanel/panel.hpp"
#include "causalpanel/rng.hpp"

namespace causalpanel {

// Known causal structure used to generate test panels and to answer
// d-separation queries.
struct GroundTruth {
    struct Edge {
        std::string src;
        std::string dst;
        int lag = 1;         // >= 1; equal-time cycles cannot occur
        double coeff = 0.0;
    };

    std::vector<std::string> nodes;  // may include the label
    std::vector<Edge> edges;
    double noise_sd = 1.0;
    double label_noise_sd = 0.25;  // noise on the latent label driver

    int node_index(const std::string& name) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == name) return static_cast<int>(i);
        return -1;
    }

    void validate() const {
        for (const auto& e : edges) {
            if (node_index(e.src) < 0) throw UnknownIdError("unknown node '" + e.src + "'");
            if (node_index(e.dst) < 0) throw UnknownIdError("unknown node '" + e.dst + "'");
            if (e.lag < 1) throw DomainError("edge lag must be >= 1");
        }
        if (noise_sd <= 0.0) throw DomainError("noise_sd must be positive");
    }

    // summary DAG over nodes: unique src->dst pairs, self-loops dropped
    std::map<int, std::set<int>> summary_children() const {
        std::map<int, std::set<int>> ch;
        for (std::size_t i = 0; i < nodes.size(); ++i) ch[static_cast<int>(i)];
        for (const auto& e : edges) {
            int s = node_index(e.src), d = node_index(e.dst);
            if (s != d) ch[s].insert(d);
        }
        return ch;
    }

    bool summary_acyclic() const {
        auto ch = summary_children();
        std::map<int, int> state;  // 0 unvisited, 1 in stack, 2 done
        std::function<bool(int)> dfs = [&](int u) {
            state[u] = 1;
            for (int v : ch[u]) {
                if (state[v] == 1) return false;
                if (state[v] == 0 && !dfs(v)) return false;
            }
            state[u] = 2;
            return true;
        };
        for (const auto& [u, _] : ch)
            if (state[u] == 0 && !dfs(u)) return false;
        return true;
    }
};

namespace detail {

// spectral radius of the VAR companion matrix
inline double companion_spectral_radius(const GroundTruth& truth,
                                        const std::vector<std::string>& vars) {
    int k = static_cast<int>(vars.size());
    int maxlag = 1;
    for (const auto& e : truth.edges) maxlag = std::max(maxlag, e.lag);
    auto vidx = [&](const std::string& n) {
        for (int i = 0; i < k; ++i)
            if (vars[i] == n) return i;
        return -1;
    };
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k * maxlag, k * maxlag);
    for (const auto& e : truth.edges) {
        int s = vidx(e.src), d = vidx(e.dst);
        if (s < 0 || d < 0) continue;  // label edges live outside the VAR
        comp(d, (e.lag - 1) * k + s) += e.coeff;
    }
    for (int l = 1; l < maxlag; ++l)
        for (int i = 0; i < k; ++i) comp(l * k + i, (l - 1) * k + i) = 1.0;
    if (comp.size() == 0) return 0.0;
    return comp.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace detail

// Simulate a linear VAR respecting the ground truth; the label is the
// indicator of its latent driver (linear combination of the label's
// parents plus noise) exceeding the driver's median. 100 burn-in steps
// are discarded.
inline CountryPanel gen_var_panel(const GroundTruth& truth, int n_years, std::uint64_t seed,
                                  const std::string& country_id = "synthetic",
                                  int first_year = 2000) {
    truth.validate();
    if (n_years < 30) throw SampleSizeError("gen_var_panel: need n_years >= 30");

    std::vector<std::string> vars;
    for (const auto& n : truth.nodes)
        if (n != kLabelName) vars.push_back(n);
    const int k = static_cast<int>(vars.size());
    if (k == 0) throw DomainError("gen_var_panel: no indicator nodes");

    double rho = detail::companion_spectral_radius(truth, vars);
    if (rho >= 1.0)
        throw StabilityError("gen_var_panel: VAR spectral radius " + std::to_string(rho) +
                             " >= 1");

    auto vidx = [&](const std::string& n) {
        for (int i = 0; i < k; ++i)
            if (vars[i] == n) return i;
        return -1;
    };

    constexpr int kBurnIn = 100;
    int maxlag = 1;
    for (const auto& e : truth.edges) maxlag = std::max(maxlag, e.lag);
    const int total = kBurnIn + n_years;

    Rng rng(seed);
    std::vector<std::vector<double>> x(static_cast<std::size_t>(k),
                                       std::vector<double>(total, 0.0));
    std::vector<double> driver(total, 0.0);
    bool has_label = truth.node_index(kLabelName) >= 0;

    for (int t = 0; t < total; ++t) {
        for (int v = 0; v < k; ++v) {
            double val = truth.noise_sd * rng.normal();
            for (const auto& e : truth.edges) {
                if (e.dst != vars[v] || t - e.lag < 0) continue;
                int s = vidx(e.src);
                if (s < 0) continue;
                val += e.coeff * x[s][t - e.lag];
            }
            x[v][t] = val;
        }
        if (has_label) {
            double d = truth.label_noise_sd * rng.normal();
            for (const auto& e : truth.edges) {
                if (e.dst != kLabelName || t - e.lag < 0) continue;
                int s = vidx(e.src);
                if (s < 0) continue;
                d += e.coeff * x[s][t - e.lag];
            }
            driver[t] = d;
        }
    }

    CountryPanel p;
    p.country_id = country_id;
    p.indicator_names = vars;
    p.years = {first_year, first_year + n_years - 1};
    p.values = MaskedMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n_years));
    for (int v = 0; v < k; ++v)
        for (int t = 0; t < n_years; ++t)
            p.values.set(static_cast<std::size_t>(v), static_cast<std::size_t>(t),
                         x[v][kBurnIn + t]);

    p.label.assign(static_cast<std::size_t>(n_years), 0);
    if (has_label) {
        std::vector<double> window(driver.begin() + kBurnIn, driver.end());
        std::vector<double> sorted = window;
        std::sort(sorted.begin(), sorted.end());
        double median = sorted[sorted.size() / 2];
        for (int t = 0; t < n_years; ++t)
            p.label[static_cast<std::size_t>(t)] = window[static_cast<std::size_t>(t)] > median ? 1 : 0;
    }
    return p;
}

// iid linear-Gaussian SCM sample over the summary DAG (topological order),
// for structure-recovery tests that do not need a time axis.
inline VariableSet gen_scm_data(const GroundTruth& truth, int n, std::uint64_t seed) {
    truth.validate();
    if (!truth.summary_acyclic())
        throw DomainError("gen_scm_data: summary graph is cyclic");
    if (n < 1) throw DomainError("gen_scm_data: n must be >= 1");

    const int k = static_cast<int>(truth.nodes.size());
    auto ch = truth.summary_children();
    std::vector<int> indeg(k, 0);
    for (const auto& [u, cs] : ch)
        for (int v : cs) ++indeg[v];
    std::vector<int> order, queue;
    for (int i = 0; i < k; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    while (!queue.empty()) {
        int u = queue.front();
        queue.erase(queue.begin());
        order.push_back(u);
        for (int v : ch[u])
            if (--indeg[v] == 0) queue.push_back(v);
    }

    // aggregate coefficients per (src,dst) in case several lags connect them
    std::map<std::pair<int, int>, double> coef;
    for (const auto& e : truth.edges) {
        int s = truth.node_index(e.src), d = truth.node_index(e.dst);
        if (s != d) coef[{s, d}] += e.coeff;
    }

    VariableSet vs;
    vs.names = truth.nodes;
    vs.cols.assign(static_cast<std::size_t>(k), std::vector<double>(n, 0.0));
    Rng rng(seed);
    for (int row = 0; row < n; ++row) {
        for (int u : order) {
            double val = truth.noise_sd * rng.normal();
            for (const auto& [sd, c] : coef)
                if (sd.second == u) val += c * vs.cols[static_cast<std::size_t>(sd.first)][row];
            vs.cols[static_cast<std::size_t>(u)][row] = val;
        }
    }
    return vs;
}

// MCAR masking of value cells; the label is untouched. Hits the requested
// fraction exactly (rounded to the nearest cell).
inline CountryPanel mask_missing(const CountryPanel& panel, double fraction,
                                 std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction < 1.0))
        throw DomainError("mask_missing: fraction must be in [0,1)");
    CountryPanel out = panel;
    const std::size_t cells = panel.n_indicators() * panel.n_years();
    auto target = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(cells)));

    std::vector<std::size_t> idx(cells);
    for (std::size_t i = 0; i < cells; ++i) idx[i] = i;
    Rng rng(seed);
    for (std::size_t i = 0; i < target; ++i) {  // partial Fisher-Yates
        std::size_t j = i + rng.uniform_index(cells - i);
        std::swap(idx[i], idx[j]);
        out.values.clear(idx[i] / panel.n_years(), idx[i] % panel.n_years());
    }
    return out;
}

// d-separation of a and b given cond on the time-collapsed summary DAG,
// via ancestral moralization.
inline bool dsep_oracle(const GroundTruth& truth, const std::string& a, const std::string& b,
                        const std::set<std::string>& cond) {
    truth.validate();
    if (!truth.summary_acyclic()) throw DomainError("dsep_oracle: summary graph is cyclic");
    int ia = truth.node_index(a), ib = truth.node_index(b);
    if (ia < 0) throw UnknownIdError("dsep_oracle: unknown node '" + a + "'");
    if (ib < 0) throw UnknownIdError("dsep_oracle: unknown node '" + b + "'");
    std::set<int> z;
    for (const auto& c : cond) {
        int ic = truth.node_index(c);
        if (ic < 0) throw UnknownIdError("dsep_oracle: unknown node '" + c + "'");
        z.insert(ic);
    }

    auto ch = truth.summary_children();
    const int k = static_cast<int>(truth.nodes.size());
    std::vector<std::set<int>> parents(static_cast<std::size_t>(k));
    for (const auto& [u, cs] : ch)
        for (int v : cs) parents[static_cast<std::size_t>(v)].insert(u);

    // ancestors of {a, b} + cond (inclusive)
    std::set<int> anc;
    std::vector<int> stack{ia, ib};
    for (int c : z) stack.push_back(c);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (!anc.insert(u).second) continue;
        for (int p : parents[static_cast<std::size_t>(u)]) stack.push_back(p);
    }

    // moral graph restricted to the ancestral set
    std::vector<std::set<int>> moral(static_cast<std::size_t>(k));
    auto connect = [&](int u, int v) {
        moral[static_cast<std::size_t>(u)].insert(v);
        moral[static_cast<std::size_t>(v)].insert(u);
    };
    for (int v : anc) {
        for (int p : parents[static_cast<std::size_t>(v)]) {
            if (!anc.count(p)) continue;
            connect(p, v);
            for (int q : parents[static_cast<std::size_t>(v)])
                if (q != p && anc.count(q)) connect(p, q);
        }
    }

    // path search avoiding cond
    if (z.count(ia) || z.count(ib)) return true;  // conditioning on an endpoint separates trivially
    std::set<int> seen{ia};
    stack = {ia};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == ib) return false;
        for (int v : moral[static_cast<std::size_t>(u)]) {
            if (z.count(v) || seen.count(v)) continue;
            seen.insert(v);
            stack.push_back(v);
        }
    }
    return true;
}

// CI tester backed by the d-separation oracle, for exact-recovery tests.
inline CiTester dsep_tester(const GroundTruth& truth) {
    return [&truth](int a, int b, const std::vector<int>& cond) {
        std::set<std::string> z;
        for (int c : cond) z.insert(truth.nodes[static_cast<std::size_t>(c)]);
        bool sep = dsep_oracle(truth, truth.nodes[static_cast<std::size_t>(a)],
                               truth.nodes[static_cast<std::size_t>(b)], z);
        CiResult r;
        r.independent = sep;
        r.p_value = sep ? 1.0 : 0.0;
        for (int c : cond) r.conditioning_set.push_back(c);
        return r;
    };
}

}  // namespace causalpanel
