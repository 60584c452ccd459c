#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "causalpanel/linreg.hpp"
#include "causalpanel/panel.hpp"
#include "causalpanel/special.hpp"

namespace causalpanel {

// ---------------------------------------------------------------------------
// Conditional independence test
// ---------------------------------------------------------------------------

struct CiResult {
    bool independent = false;
    double p_value = 1.0;
    std::vector<int> conditioning_set;
    bool ols_fallback = false;  // IRLS failed to converge
};

// Partial-correlation CI test on Huber-IRLS residuals: regress a and b on
// the conditioning set (plus intercept), correlate the robust residuals,
// and judge significance by the Fisher z-transform at effective sample
// size n - |cond| - 3.
inline CiResult robust_ci_test(std::span<const double> a, std::span<const double> b,
                               const std::vector<std::span<const double>>& cond,
                               double alpha) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) throw DomainError("robust_ci_test: length mismatch");
    const int m = static_cast<int>(cond.size());
    if (n < m + 8) throw SampleSizeError("robust_ci_test: need n >= |cond| + 8");

    Eigen::MatrixXd X(n, m + 1);
    X.col(0).setOnes();
    for (int j = 0; j < m; ++j) {
        if (static_cast<int>(cond[j].size()) != n)
            throw DomainError("robust_ci_test: conditioning length mismatch");
        for (int i = 0; i < n; ++i) X(i, j + 1) = cond[j][i];
    }
    Eigen::VectorXd av(n), bv(n);
    for (int i = 0; i < n; ++i) {
        av[i] = a[i];
        bv[i] = b[i];
    }

    CiResult res;
    auto residuals = [&](const Eigen::VectorXd& y) {
        RobustFit fit = huber_irls(X, y);
        if (!fit.converged) {
            res.ols_fallback = true;
            try {
                return ols(X, y).residuals;
            } catch (const CollinearError&) {
                Eigen::VectorXd beta = ridge_solve(X, y);
                return Eigen::VectorXd(y - X * beta);
            }
        }
        return fit.residuals;
    };
    Eigen::VectorXd ra = residuals(av);
    Eigen::VectorXd rb = residuals(bv);

    double va = ra.squaredNorm() / n, vb = rb.squaredNorm() / n;
    double floor_a = 1e-20 * std::max(1.0, av.squaredNorm() / n);
    double floor_b = 1e-20 * std::max(1.0, bv.squaredNorm() / n);
    if (va <= floor_a || vb <= floor_b)
        throw DegenerateError("robust_ci_test: residual variance degenerate, dependence undecidable");

    std::vector<double> xa(ra.data(), ra.data() + n), xb(rb.data(), rb.data() + n);
    double r = pearson(xa, xb);
    res.p_value = fisher_z_pvalue(r, static_cast<double>(n - m - 3));
    res.independent = res.p_value >= alpha;
    return res;
}

// ---------------------------------------------------------------------------
// Marked mixed graph
// ---------------------------------------------------------------------------

// Edge kinds name their arrowheads relative to the normalized (a < b)
// endpoint pair. Dashed heads come from collider orientation (latent
// confounding possible); marked directed edges passed the genuine-causation
// rules.
enum class EdgeKind {
    undirected,
    dashed_into_a,
    dashed_into_b,
    dashed_both,
    directed_a_to_b,
    directed_b_to_a,
    marked_a_to_b,
    marked_b_to_a,
};

inline std::string to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::undirected: return "undirected";
        case EdgeKind::dashed_into_a: return "dashed_into_a";
        case EdgeKind::dashed_into_b: return "dashed_into_b";
        case EdgeKind::dashed_both: return "dashed_both";
        case EdgeKind::directed_a_to_b: return "directed_a_to_b";
        case EdgeKind::directed_b_to_a: return "directed_b_to_a";
        case EdgeKind::marked_a_to_b: return "marked_a_to_b";
        case EdgeKind::marked_b_to_a: return "marked_b_to_a";
    }
    return "?";
}

class MarkedGraph {
public:
    using Pair = std::pair<int, int>;

    std::vector<std::string> nodes;
    std::map<Pair, EdgeKind> edges;      // key normalized a < b
    std::map<Pair, std::set<int>> sepsets;
    std::vector<std::string> warnings;

    static Pair norm(int u, int v) { return u < v ? Pair{u, v} : Pair{v, u}; }

    bool adjacent(int u, int v) const { return edges.count(norm(u, v)) > 0; }

    EdgeKind kind(int u, int v) const { return edges.at(norm(u, v)); }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for (const auto& [pq, k] : edges) {
            if (pq.first == u) out.push_back(pq.second);
            else if (pq.second == u) out.push_back(pq.first);
        }
        return out;  // sorted by construction of the map
    }

    // arrowhead (any style) pointing at `at` on edge {u, v}
    bool head_at(int u, int v, int at) const {
        Pair pq = norm(u, v);
        bool at_a = at == pq.first;
        switch (edges.at(pq)) {
            case EdgeKind::undirected: return false;
            case EdgeKind::dashed_into_a: return at_a;
            case EdgeKind::dashed_into_b: return !at_a;
            case EdgeKind::dashed_both: return true;
            case EdgeKind::directed_a_to_b: return !at_a;
            case EdgeKind::directed_b_to_a: return at_a;
            case EdgeKind::marked_a_to_b: return !at_a;
            case EdgeKind::marked_b_to_a: return at_a;
        }
        return false;
    }

    bool is_marked(int u, int v) const {
        EdgeKind k = kind(u, v);
        return k == EdgeKind::marked_a_to_b || k == EdgeKind::marked_b_to_a;
    }

    // for a marked/directed edge: true if it points u -> v
    bool points(int u, int v) const { return head_at(u, v, v) && !head_at(u, v, u); }

    int arrowhead_count() const {
        int c = 0;
        for (const auto& [pq, k] : edges) {
            c += head_at(pq.first, pq.second, pq.first) ? 1 : 0;
            c += head_at(pq.first, pq.second, pq.second) ? 1 : 0;
        }
        return c;
    }

    int marked_count() const {
        int c = 0;
        for (const auto& [pq, k] : edges)
            if (k == EdgeKind::marked_a_to_b || k == EdgeKind::marked_b_to_a) ++c;
        return c;
    }

    // reachability via marked directed edges only
    bool marked_path(int from, int to) const {
        std::vector<int> stack{from};
        std::set<int> seen{from};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u == to) return true;
            for (int v : neighbors(u)) {
                if (seen.count(v)) continue;
                if (is_marked(u, v) && points(u, v)) {
                    seen.insert(v);
                    stack.push_back(v);
                }
            }
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// IC* phases
// ---------------------------------------------------------------------------

using CiTester = std::function<CiResult(int a, int b, const std::vector<int>& cond)>;

namespace detail {

// lexicographic k-subsets of a sorted candidate list
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Step (a): start from the complete graph and remove the edge {a,b} as soon
// as some conditioning set S (drawn from the current neighborhoods, sizes
// 0..max_cond, lexicographic) renders a and b independent; S is recorded as
// the pair's sepset. Pairs whose tests all error stay linked with a warning.
inline MarkedGraph skeleton(const std::vector<std::string>& names, const CiTester& test,
                            int max_cond) {
    if (max_cond < 0) throw DomainError("skeleton: max_cond must be >= 0");
    const int k = static_cast<int>(names.size());
    MarkedGraph g;
    g.nodes = names;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.edges[{i, j}] = EdgeKind::undirected;

    for (int size = 0; size <= max_cond; ++size) {
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if (!g.adjacent(a, b)) continue;
                std::set<int> cand_set;
                for (int v : g.neighbors(a)) cand_set.insert(v);
                for (int v : g.neighbors(b)) cand_set.insert(v);
                cand_set.erase(a);
                cand_set.erase(b);
                std::vector<int> cand(cand_set.begin(), cand_set.end());
                if (static_cast<int>(cand.size()) < size) continue;

                bool pair_failed = false;
                std::vector<std::size_t> idx(size);
                for (int i = 0; i < size; ++i) idx[i] = static_cast<std::size_t>(i);
                bool more = true;
                while (more) {
                    std::vector<int> S;
                    for (auto i : idx) S.push_back(cand[i]);
                    try {
                        CiResult r = test(a, b, S);
                        if (r.independent) {
                            g.edges.erase({a, b});
                            g.sepsets[{a, b}] = std::set<int>(S.begin(), S.end());
                            break;
                        }
                    } catch (const Error& e) {
                        if (!pair_failed)
                            g.warnings.push_back("CI test undecidable for (" + names[a] + ", " +
                                                 names[b] + "): " + e.what());
                        pair_failed = true;
                    }
                    more = size > 0 && detail::next_combination(idx, cand.size());
                }
            }
        }
    }
    return g;
}

inline MarkedGraph skeleton(const VariableSet& vs, double alpha, int max_cond) {
    CiTester tester = [&vs, alpha](int a, int b, const std::vector<int>& cond) {
        std::vector<std::span<const double>> cc;
        for (int c : cond) cc.emplace_back(vs.cols[c]);
        return robust_ci_test(vs.cols[a], vs.cols[b], cc, alpha);
    };
    return skeleton(vs.names, tester, max_cond);
}

namespace detail {

// add a dashed arrowhead pointing at `c` on edge {x, c}
inline void add_dashed_head(MarkedGraph& g, int x, int c) {
    auto pq = MarkedGraph::norm(x, c);
    EdgeKind& k = g.edges.at(pq);
    bool c_is_a = c == pq.first;
    switch (k) {
        case EdgeKind::undirected:
            k = c_is_a ? EdgeKind::dashed_into_a : EdgeKind::dashed_into_b;
            return;
        case EdgeKind::dashed_into_a:
            if (!c_is_a) {
                k = EdgeKind::dashed_both;
                g.warnings.push_back("conflicting collider orientations on (" +
                                     g.nodes[pq.first] + ", " + g.nodes[pq.second] + ")");
            }
            return;
        case EdgeKind::dashed_into_b:
            if (c_is_a) {
                k = EdgeKind::dashed_both;
                g.warnings.push_back("conflicting collider orientations on (" +
                                     g.nodes[pq.first] + ", " + g.nodes[pq.second] + ")");
            }
            return;
        default:
            return;  // head already present or stronger mark; never downgrade
    }
}

}  // namespace detail

// Step (b): for every non-adjacent pair with a common neighbor c not in
// their sepset, both edges get dashed arrowheads into c.
inline MarkedGraph orient_colliders(const MarkedGraph& input) {
    MarkedGraph g = input;
    const int k = static_cast<int>(g.nodes.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (g.adjacent(a, b)) continue;
            auto it = g.sepsets.find({a, b});
            if (it == g.sepsets.end())
                throw Error("orient_colliders: missing sepset for non-adjacent pair (" +
                            g.nodes[a] + ", " + g.nodes[b] + ")");
            for (int c = 0; c < k; ++c) {
                if (c == a || c == b) continue;
                if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                if (it->second.count(c)) continue;
                detail::add_dashed_head(g, a, c);
                detail::add_dashed_head(g, b, c);
            }
        }
    }
    return g;
}

// Step (c): close the graph under
//   R1: a*->c - b with a,b non-adjacent  =>  c -*-> b (marked)
//   R2: a - b adjacent and a marked-directed path a ~> b  =>  a -> b
// Scan order is lexicographic; applications that would create a marked
// directed cycle are skipped with a warning.
inline MarkedGraph apply_rules(const MarkedGraph& input) {
    MarkedGraph g = input;
    const int k = static_cast<int>(g.nodes.size());
    bool changed = true;
    while (changed) {
        changed = false;

        // R1
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                if (a == b || g.adjacent(a, b)) continue;
                for (int c = 0; c < k; ++c) {
                    if (c == a || c == b) continue;
                    if (!g.adjacent(a, c) || !g.adjacent(c, b)) continue;
                    if (!g.head_at(a, c, c)) continue;   // need a *-> c
                    if (g.head_at(c, b, c)) continue;    // c side must be head-free
                    auto pq = MarkedGraph::norm(c, b);
                    EdgeKind want = c == pq.first ? EdgeKind::marked_a_to_b
                                                  : EdgeKind::marked_b_to_a;
                    if (g.edges.at(pq) == want) continue;
                    if (g.marked_path(b, c)) {
                        g.warnings.push_back("R1 skipped: marking " + g.nodes[c] + " -> " +
                                             g.nodes[b] + " would close a marked cycle");
                        continue;
                    }
                    g.edges.at(pq) = want;
                    changed = true;
                }
            }
        }

        // R2
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                if (a == b || !g.adjacent(a, b)) continue;
                if (g.head_at(a, b, b)) continue;  // arrowhead already present
                if (!g.marked_path(a, b)) continue;
                auto pq = MarkedGraph::norm(a, b);
                EdgeKind cur = g.edges.at(pq);
                if (cur == EdgeKind::undirected) {
                    g.edges.at(pq) = a == pq.first ? EdgeKind::directed_a_to_b
                                                   : EdgeKind::directed_b_to_a;
                    changed = true;
                } else {
                    g.warnings.push_back("R2 skipped on (" + g.nodes[a] + ", " + g.nodes[b] +
                                         "): conflicting arrowhead");
                }
            }
        }
    }
    return g;
}

struct EdgeRecord {
    std::string a;
    std::string b;
    EdgeKind kind = EdgeKind::undirected;

    bool operator==(const EdgeRecord&) const = default;
};

struct ClassifiedEdges {
    std::vector<EdgeRecord> dependence;       // every surviving edge
    std::vector<EdgeRecord> genuine;          // marked directed edges only
    std::vector<std::string> dependence_nodes;
    std::vector<std::string> genuine_nodes;
};

// Split the fixpoint graph into the dependence view (everything that
// survived conditioning) and the genuine-causation view (marked edges).
inline ClassifiedEdges classify_edges(const MarkedGraph& g) {
    ClassifiedEdges out;
    std::set<std::string> dep_nodes, gen_nodes;
    for (const auto& [pq, k] : g.edges) {
        EdgeRecord rec{g.nodes[pq.first], g.nodes[pq.second], k};
        out.dependence.push_back(rec);
        dep_nodes.insert(rec.a);
        dep_nodes.insert(rec.b);
        if (k == EdgeKind::marked_a_to_b || k == EdgeKind::marked_b_to_a) {
            out.genuine.push_back(rec);
            gen_nodes.insert(rec.a);
            gen_nodes.insert(rec.b);
        }
    }
    out.dependence_nodes.assign(dep_nodes.begin(), dep_nodes.end());
    out.genuine_nodes.assign(gen_nodes.begin(), gen_nodes.end());
    return out;
}

// Names adjacent to `target` in the final graph, and those connected to it
// by a marked edge.
struct LabelAdjacency {
    std::set<std::string> dependence;
    std::set<std::string> genuine;
};

inline LabelAdjacency label_adjacency(const MarkedGraph& g, const std::string& target) {
    LabelAdjacency out;
    int t = -1;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i] == target) t = static_cast<int>(i);
    if (t < 0) return out;
    for (const auto& [pq, k] : g.edges) {
        int other = -1;
        if (pq.first == t) other = pq.second;
        else if (pq.second == t) other = pq.first;
        if (other < 0) continue;
        out.dependence.insert(g.nodes[other]);
        if (k == EdgeKind::marked_a_to_b || k == EdgeKind::marked_b_to_a)
            out.genuine.insert(g.nodes[other]);
    }
    return out;
}

}  // namespace causalpanel
