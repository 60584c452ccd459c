#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "causalpanel/aggregate.hpp"
#include "causalpanel/csv.hpp"
#include "causalpanel/granger.hpp"
#include "causalpanel/icstar.hpp"
#include "causalpanel/stats.hpp"

namespace causalpanel {

enum class GraphView { dependence, genuine };

inline std::string to_string(GraphView v) {
    return v == GraphView::dependence ? "dependence" : "genuine";
}

enum class NodeRole { indicator, target };

struct GraphDocument {
    struct Node {
        std::string id;
        std::string label;
        NodeRole role = NodeRole::indicator;
        bool operator==(const Node&) const = default;
    };
    // kind: undirected | dashed | dashed_both | directed | marked
    struct Edge {
        std::string src;
        std::string dst;
        std::string kind;
        std::optional<double> weight;
        bool operator==(const Edge&) const = default;
    };

    GraphView view = GraphView::dependence;
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    bool operator==(const GraphDocument&) const = default;

    void validate() const {
        std::set<std::string> ids;
        for (const auto& n : nodes)
            if (!ids.insert(n.id).second)
                throw DomainError("GraphDocument: duplicate node id '" + n.id + "'");
        for (const auto& e : edges)
            if (!ids.count(e.src) || !ids.count(e.dst))
                throw DomainError("GraphDocument: edge references unknown node");
    }
};

// Flatten a marked graph into a document. The genuine view carries only the
// marked edges.
inline GraphDocument to_graph_document(const MarkedGraph& g, GraphView view,
                                       const std::string& target = kLabelName) {
    GraphDocument doc;
    doc.view = view;
    for (const auto& name : g.nodes)
        doc.nodes.push_back({name, name,
                             name == target ? NodeRole::target : NodeRole::indicator});
    for (const auto& [pq, k] : g.edges) {
        const std::string& a = g.nodes[pq.first];
        const std::string& b = g.nodes[pq.second];
        GraphDocument::Edge e;
        switch (k) {
            case EdgeKind::undirected: e = {a, b, "undirected", std::nullopt}; break;
            case EdgeKind::dashed_into_a: e = {b, a, "dashed", std::nullopt}; break;
            case EdgeKind::dashed_into_b: e = {a, b, "dashed", std::nullopt}; break;
            case EdgeKind::dashed_both: e = {a, b, "dashed_both", std::nullopt}; break;
            case EdgeKind::directed_a_to_b: e = {a, b, "directed", std::nullopt}; break;
            case EdgeKind::directed_b_to_a: e = {b, a, "directed", std::nullopt}; break;
            case EdgeKind::marked_a_to_b: e = {a, b, "marked", std::nullopt}; break;
            case EdgeKind::marked_b_to_a: e = {b, a, "marked", std::nullopt}; break;
        }
        if (view == GraphView::genuine && e.kind != "marked") continue;
        doc.edges.push_back(std::move(e));
    }
    return doc;
}

// Granger edges as a directed document; weight = -log10(p) capped at 16.
inline GraphDocument to_graph_document(const std::vector<GrangerEdge>& edges,
                                       const std::vector<std::string>& variables,
                                       const std::string& target = kLabelName) {
    GraphDocument doc;
    doc.view = GraphView::dependence;
    for (const auto& name : variables)
        doc.nodes.push_back({name, name,
                             name == target ? NodeRole::target : NodeRole::indicator});
    for (const auto& e : edges) {
        double w = e.p_value <= 0.0 ? 16.0 : std::min(16.0, -std::log10(e.p_value));
        doc.edges.push_back({e.cause, e.effect, "directed", w});
    }
    return doc;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace detail

// DOT rendering: solid arrows for directed/marked (marked carry a "*"
// label), dashed for potential-latent heads, dir=none for undirected.
// Output is byte-stable for a given document.
inline std::string export_dot(const GraphDocument& doc) {
    doc.validate();
    std::ostringstream os;
    os << "digraph " << to_string(doc.view) << "_view {\n";
    os << "  node [shape=ellipse];\n";

    std::set<std::string> genuine_nodes;
    if (doc.view == GraphView::genuine)
        for (const auto& e : doc.edges)
            if (e.kind == "marked") {
                genuine_nodes.insert(e.src);
                genuine_nodes.insert(e.dst);
            }

    for (const auto& n : doc.nodes) {
        os << "  " << detail::dot_quote(n.id);
        std::vector<std::string> attrs;
        if (n.role == NodeRole::target) attrs.push_back("shape=box");
        if (genuine_nodes.count(n.id)) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=pink");
        }
        if (!attrs.empty()) {
            os << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }

    for (const auto& e : doc.edges) {
        os << "  " << detail::dot_quote(e.src) << " -> " << detail::dot_quote(e.dst);
        std::vector<std::string> attrs;
        if (e.kind == "undirected") attrs.push_back("dir=none");
        else if (e.kind == "dashed") attrs.push_back("style=dashed");
        else if (e.kind == "dashed_both") {
            attrs.push_back("style=dashed");
            attrs.push_back("dir=both");
        } else if (e.kind == "marked") attrs.push_back("label=\"*\"");
        if (e.weight) attrs.push_back("weight=" + csv::format_double(*e.weight));
        if (!attrs.empty()) {
            os << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Canonical JSON (nlohmann::json keeps object keys sorted)
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const GraphDocument& doc) {
    nlohmann::json j;
    j["view"] = to_string(doc.view);
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : doc.nodes)
        j["nodes"].push_back({{"id", n.id},
                              {"label", n.label},
                              {"role", n.role == NodeRole::target ? "target" : "indicator"}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : doc.edges) {
        nlohmann::json je = {{"src", e.src}, {"dst", e.dst}, {"kind", e.kind}};
        if (e.weight) je["weight"] = *e.weight;
        j["edges"].push_back(je);
    }
    return j;
}

inline std::string export_json(const GraphDocument& doc) {
    doc.validate();
    return to_json(doc).dump(2) + "\n";
}

inline GraphDocument import_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GraphDocument doc;
    doc.view = j.at("view").get<std::string>() == "genuine" ? GraphView::genuine
                                                            : GraphView::dependence;
    for (const auto& n : j.at("nodes"))
        doc.nodes.push_back({n.at("id").get<std::string>(), n.at("label").get<std::string>(),
                             n.at("role").get<std::string>() == "target" ? NodeRole::target
                                                                         : NodeRole::indicator});
    for (const auto& e : j.at("edges")) {
        GraphDocument::Edge ed{e.at("src").get<std::string>(), e.at("dst").get<std::string>(),
                               e.at("kind").get<std::string>(), std::nullopt};
        if (e.contains("weight")) ed.weight = e.at("weight").get<double>();
        doc.edges.push_back(std::move(ed));
    }
    doc.validate();
    return doc;
}

// ---------------------------------------------------------------------------
// Causality matrix + table exports
// ---------------------------------------------------------------------------

enum class MatrixOrientation { row_effect, row_cause };
enum class MatrixEncoding { p_value, one_minus_p };

inline MatrixOrientation matrix_orientation_from_string(const std::string& s) {
    if (s == "row_effect") return MatrixOrientation::row_effect;
    if (s == "row_cause") return MatrixOrientation::row_cause;
    throw DomainError("unknown matrix orientation '" + s + "'");
}

inline MatrixEncoding matrix_encoding_from_string(const std::string& s) {
    if (s == "p" || s == "p_value") return MatrixEncoding::p_value;
    if (s == "one_minus_p") return MatrixEncoding::one_minus_p;
    throw DomainError("unknown matrix encoding '" + s + "'");
}

// CSV with a variable header row and column; cell (r, c) holds the p-value
// for "column variable causes row variable" under row_effect orientation.
inline std::string matrix_csv(const CausalityMatrix& m,
                              MatrixOrientation orient = MatrixOrientation::row_effect,
                              MatrixEncoding enc = MatrixEncoding::p_value) {
    std::ostringstream os;
    os << "variable";
    for (const auto& v : m.variables) os << ',' << csv::quote_field(v);
    os << '\n';
    const std::size_t k = m.variables.size();
    for (std::size_t r = 0; r < k; ++r) {
        os << csv::quote_field(m.variables[r]);
        for (std::size_t c = 0; c < k; ++c) {
            double v = orient == MatrixOrientation::row_effect ? m.p[r][c] : m.p[c][r];
            if (enc == MatrixEncoding::one_minus_p) v = 1.0 - v;
            os << ',' << csv::format_double(v);
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json to_json(const CausalityMatrix& m,
                              MatrixOrientation orient = MatrixOrientation::row_effect,
                              MatrixEncoding enc = MatrixEncoding::p_value) {
    nlohmann::json j;
    j["variables"] = m.variables;
    j["alpha"] = m.alpha;
    j["max_lag"] = m.max_lag;
    j["orientation"] = orient == MatrixOrientation::row_effect ? "row_effect" : "row_cause";
    j["encoding"] = enc == MatrixEncoding::p_value ? "p_value" : "one_minus_p";
    j["warnings"] = m.warnings;
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t k = m.variables.size();
    for (std::size_t r = 0; r < k; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < k; ++c) {
            double v = orient == MatrixOrientation::row_effect ? m.p[r][c] : m.p[c][r];
            if (enc == MatrixEncoding::one_minus_p) v = 1.0 - v;
            row.push_back(v);
        }
        rows.push_back(row);
    }
    j["p"] = rows;
    return j;
}

// Correlation heat-map data: symmetric matrix with variable names.
inline nlohmann::json heatmap_json(const PearsonResult& pr) {
    nlohmann::json j;
    j["variables"] = pr.names;
    j["excluded"] = pr.excluded;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : pr.r) rows.push_back(row);
    j["r"] = rows;
    return j;
}

inline std::string ranking_csv(const RankingTable& t) {
    std::ostringstream os;
    os << "indicator,frequency\n";
    for (const auto& [name, freq] : t.rows)
        os << csv::quote_field(name) << ',' << freq << '\n';
    return os.str();
}

inline std::string intersection_csv(const IntersectionTable& t) {
    std::ostringstream os;
    os << "country,indicator\n";
    for (const auto& [country, name] : t.rows)
        os << csv::quote_field(country) << ',' << csv::quote_field(name) << '\n';
    return os.str();
}

}  // namespace causalpanel
