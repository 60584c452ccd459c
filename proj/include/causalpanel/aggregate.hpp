#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "causalpanel/granger.hpp"

namespace causalpanel {

struct CountryFindings {
    std::string country_id;
    std::vector<GrangerEdge> granger_label_edges;   // edges touching the label
    std::set<std::string> ic_dependence_label;      // label-adjacent indicators
    std::set<std::string> ic_genuine_label;         // subset with marked edges
    std::vector<std::string> warnings;
};

enum class RankMethod { granger, ic_dependence, ic_genuine };

inline std::string to_string(RankMethod m) {
    switch (m) {
        case RankMethod::granger: return "granger";
        case RankMethod::ic_dependence: return "ic_dependence";
        case RankMethod::ic_genuine: return "ic_genuine";
    }
    return "?";
}

struct RankingTable {
    RankMethod method = RankMethod::granger;
    std::vector<std::pair<std::string, int>> rows;  // (indicator, frequency)
};

namespace detail {

inline std::set<std::string> label_partners(const CountryFindings& f, RankMethod m) {
    switch (m) {
        case RankMethod::granger: {
            std::set<std::string> out;
            for (const auto& e : f.granger_label_edges) {
                if (e.cause != kLabelName) out.insert(e.cause);
                if (e.effect != kLabelName) out.insert(e.effect);
            }
            return out;
        }
        case RankMethod::ic_dependence: return f.ic_dependence_label;
        case RankMethod::ic_genuine: return f.ic_genuine_label;
    }
    return {};
}

}  // namespace detail

// Count, per indicator, the number of countries where it is label-adjacent
// under the method; sort by frequency descending, name ascending.
inline RankingTable rank(const std::vector<CountryFindings>& findings, RankMethod method) {
    std::map<std::string, int> freq;
    for (const auto& f : findings)
        for (const auto& name : detail::label_partners(f, method)) ++freq[name];
    RankingTable t;
    t.method = method;
    t.rows.assign(freq.begin(), freq.end());
    std::sort(t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return t;
}

struct IntersectionTable {
    std::vector<std::pair<std::string, std::string>> rows;  // (country, indicator)
};

// (country, indicator) pairs label-adjacent under Granger AND under IC*;
// strict mode uses the genuine-causation side of IC*.
inline IntersectionTable intersect(const std::vector<CountryFindings>& findings,
                                   bool strict_genuine = false) {
    IntersectionTable t;
    for (const auto& f : findings) {
        auto granger = detail::label_partners(f, RankMethod::granger);
        const auto& ic = strict_genuine ? f.ic_genuine_label : f.ic_dependence_label;
        for (const auto& name : granger)
            if (ic.count(name)) t.rows.emplace_back(f.country_id, name);
    }
    std::sort(t.rows.begin(), t.rows.end());
    return t;
}

struct RelationshipCounts {
    int granger_total = 0;
    int ic_dependence_total = 0;
    int ic_genuine_total = 0;
};

inline RelationshipCounts relationship_counts(const std::vector<CountryFindings>& findings) {
    RelationshipCounts c;
    for (const auto& f : findings) {
        c.granger_total += static_cast<int>(f.granger_label_edges.size());
        c.ic_dependence_total += static_cast<int>(f.ic_dependence_label.size());
        c.ic_genuine_total += static_cast<int>(f.ic_genuine_label.size());
    }
    return c;
}

}  // namespace causalpanel
