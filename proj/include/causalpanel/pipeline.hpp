#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "causalpanel/aggregate.hpp"
#include "causalpanel/graph_io.hpp"
#include "causalpanel/granger.hpp"
#include "causalpanel/icstar.hpp"
#include "causalpanel/imputation.hpp"
#include "causalpanel/panel_io.hpp"
#include "causalpanel/stats.hpp"
#include "causalpanel/synth.hpp"

namespace causalpanel {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct RunConfig {
    ImputeMethod imputation_method = ImputeMethod::msreg;
    int knn_k = 5;
    double sparse_threshold = 0.8;
    bool transform_enabled = true;
    AdfKind adf_kind = AdfKind::constant;
    int granger_max_lag = 2;
    double alpha_granger = 0.05;
    double alpha_ci = 0.05;
    int max_cond = 2;
    double prune_threshold = 0.95;
    bool prune_before_impute = false;
    MatrixOrientation matrix_orientation = MatrixOrientation::row_effect;
    MatrixEncoding matrix_encoding = MatrixEncoding::p_value;
    bool strict_genuine = false;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    int workers = 0;  // 0 = hardware concurrency

    void validate() const {
        if (!(sparse_threshold >= 0.0 && sparse_threshold <= 1.0))
            throw DomainError("config: sparse_threshold must be in [0,1]");
        if (!(prune_threshold > 0.0 && prune_threshold <= 1.0))
            throw DomainError("config: prune_threshold must be in (0,1]");
        if (!(alpha_granger > 0.0 && alpha_granger < 1.0))
            throw DomainError("config: alpha_granger must be in (0,1)");
        if (!(alpha_ci > 0.0 && alpha_ci < 1.0))
            throw DomainError("config: alpha_ci must be in (0,1)");
        if (granger_max_lag < 1) throw DomainError("config: granger_max_lag must be >= 1");
        if (max_cond < 0) throw DomainError("config: max_cond must be >= 0");
        if (knn_k < 1) throw DomainError("config: knn_k must be >= 1");
        if (workers < 0) throw DomainError("config: workers must be >= 0");
    }
};

inline nlohmann::json to_json(const RunConfig& c) {
    return {
        {"imputation_method", to_string(c.imputation_method)},
        {"knn_k", c.knn_k},
        {"sparse_threshold", c.sparse_threshold},
        {"transform_enabled", c.transform_enabled},
        {"adf_kind", to_string(c.adf_kind)},
        {"granger_max_lag", c.granger_max_lag},
        {"alpha_granger", c.alpha_granger},
        {"alpha_ci", c.alpha_ci},
        {"max_cond", c.max_cond},
        {"prune_threshold", c.prune_threshold},
        {"prune_before_impute", c.prune_before_impute},
        {"matrix_orientation",
         c.matrix_orientation == MatrixOrientation::row_effect ? "row_effect" : "row_cause"},
        {"matrix_encoding",
         c.matrix_encoding == MatrixEncoding::p_value ? "p_value" : "one_minus_p"},
        {"strict_genuine", c.strict_genuine},
        {"seed", c.seed},
    };
}

// Stable hash of the analysis-relevant configuration (output_dir and
// workers excluded: they never change results).
inline std::string config_hash(const RunConfig& c) {
    std::uint64_t h = fnv1a(to_json(c).dump());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Key-value config file: one `key = value` per line, '#' comments.
inline void apply_config_file(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        auto as_bool = [&](const std::string& v) {
            if (v == "true" || v == "1") return true;
            if (v == "false" || v == "0") return false;
            throw ParseError("expected boolean for '" + key + "'", lineno);
        };
        if (key == "imputation_method") c.imputation_method = impute_method_from_string(val);
        else if (key == "knn_k") c.knn_k = static_cast<int>(csv::parse_int(val, lineno));
        else if (key == "sparse_threshold") c.sparse_threshold = csv::parse_double(val, lineno);
        else if (key == "transform_enabled") c.transform_enabled = as_bool(val);
        else if (key == "adf_kind") c.adf_kind = adf_kind_from_string(val);
        else if (key == "granger_max_lag")
            c.granger_max_lag = static_cast<int>(csv::parse_int(val, lineno));
        else if (key == "alpha_granger") c.alpha_granger = csv::parse_double(val, lineno);
        else if (key == "alpha_ci") c.alpha_ci = csv::parse_double(val, lineno);
        else if (key == "max_cond") c.max_cond = static_cast<int>(csv::parse_int(val, lineno));
        else if (key == "prune_threshold") c.prune_threshold = csv::parse_double(val, lineno);
        else if (key == "prune_before_impute") c.prune_before_impute = as_bool(val);
        else if (key == "matrix_orientation")
            c.matrix_orientation = matrix_orientation_from_string(val);
        else if (key == "matrix_encoding") c.matrix_encoding = matrix_encoding_from_string(val);
        else if (key == "strict_genuine") c.strict_genuine = as_bool(val);
        else if (key == "seed")
            c.seed = static_cast<std::uint64_t>(csv::parse_int(val, lineno));
        else if (key == "output_dir") c.output_dir = val;
        else if (key == "workers") c.workers = static_cast<int>(csv::parse_int(val, lineno));
        else throw ParseError("unknown config key '" + key + "'", lineno);
    }
}

// ---------------------------------------------------------------------------
// Per-country analysis
// ---------------------------------------------------------------------------

struct SeriesMetaEntry {
    std::string indicator;
    TransformTag transform;
    int diff_order = 0;
    bool stationary = false;
    bool normal = false;
};

struct CountryAnalysis {
    std::string country_id;
    bool ok = false;
    std::string error;  // set when the country was skipped

    VariableSet analysis_set;  // post transform/stationarize/prune, label included
    CausalityMatrix matrix;
    GrangerEdges granger_edges;
    MarkedGraph graph;  // rule fixpoint
    CountryFindings findings;
    std::vector<SeriesMetaEntry> series_meta;
    std::optional<DriftReport> drift_report;
    PearsonResult correlations;
    std::vector<std::string> pruned;
    std::vector<std::string> warnings;
};

namespace detail {

inline VariableSet complete_case_set(const CountryPanel& p) {
    VariableSet vs;
    vs.names = p.indicator_names;
    std::vector<std::size_t> rows;
    for (std::size_t y = 0; y < p.n_years(); ++y) {
        bool all = true;
        for (std::size_t i = 0; i < p.n_indicators() && all; ++i)
            all = p.values.observed(i, y);
        if (all) rows.push_back(y);
    }
    for (std::size_t i = 0; i < p.n_indicators(); ++i) {
        std::vector<double> col;
        for (std::size_t y : rows) col.push_back(p.values.value(i, y));
        vs.cols.push_back(std::move(col));
    }
    return vs;
}

inline CountryPanel drop_indicators(const CountryPanel& p, const std::set<std::string>& drop) {
    CountryPanel out;
    out.country_id = p.country_id;
    out.years = p.years;
    out.label = p.label;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.n_indicators(); ++i)
        if (!drop.count(p.indicator_names[i])) {
            keep.push_back(i);
            out.indicator_names.push_back(p.indicator_names[i]);
        }
    out.values = MaskedMatrix(keep.size(), p.n_years());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t y = 0; y < p.n_years(); ++y)
            if (auto v = p.values.at(keep[r], y)) out.values.set(r, y, *v);
    return out;
}

}  // namespace detail

// Full single-country chain: impute -> transform -> stationarize -> prune ->
// Granger -> IC*. Pure given (panel, config); the RNG substream comes from
// (seed, country_id) so batch composition never perturbs results.
inline CountryAnalysis analyze_country(const CountryPanel& input, const RunConfig& cfg) {
    CountryAnalysis out;
    out.country_id = input.country_id;
    try {
        CountryPanel panel = input;

        if (cfg.prune_before_impute) {
            VariableSet raw = detail::complete_case_set(panel);
            if (raw.n_obs() >= 3) {
                auto pruned = prune_correlated(raw, cfg.prune_threshold, {});
                out.pruned = pruned.dropped;
                for (const auto& w : pruned.warnings) out.warnings.push_back(w);
                panel = detail::drop_indicators(
                    panel, {pruned.dropped.begin(), pruned.dropped.end()});
            } else {
                out.warnings.push_back(
                    "prune_before_impute skipped: fewer than 3 complete-case years");
            }
        }

        // imputation (skipped when already complete)
        if (!panel.values.complete()) {
            std::uint64_t sub = substream_seed(cfg.seed, panel.country_id);
            ImputedPanel imp = impute(panel, cfg.imputation_method, cfg.knn_k, sub);
            for (const auto& w : imp.warnings) out.warnings.push_back(w);
            out.drift_report = drift(panel, imp);
            panel = imp.panel;
        }

        // transform + stationarize every indicator; the label is exempt from
        // both and only truncated for alignment
        const std::size_t ni = panel.n_indicators();
        std::vector<std::vector<double>> cols(ni);
        std::vector<SeriesMetaEntry> meta(ni);
        int max_diff = 0;
        for (std::size_t i = 0; i < ni; ++i) {
            std::vector<double> series;
            for (std::size_t y = 0; y < panel.n_years(); ++y)
                series.push_back(panel.values.value(i, y));
            meta[i].indicator = panel.indicator_names[i];

            if (cfg.transform_enabled) {
                ToNormalResult tn = to_normal(series);
                series = std::move(tn.y);
                meta[i].transform = tn.tag;
                meta[i].normal = tn.normal;
            }

            StationarizeResult st = stationarize(series, cfg.adf_kind);
            for (const auto& w : st.warnings)
                out.warnings.push_back(panel.indicator_names[i] + ": " + w);
            meta[i].diff_order = st.diff_order;
            meta[i].stationary = st.stationary;
            max_diff = std::max(max_diff, st.diff_order);
            cols[i] = std::move(st.y);
        }
        out.series_meta = std::move(meta);

        // alignment: every series ends at the last year; drop the first
        // (max_diff - d) entries of each, and the label's first max_diff
        VariableSet vs;
        for (std::size_t i = 0; i < ni; ++i) {
            std::size_t extra = cols[i].size() - (panel.n_years() - static_cast<std::size_t>(max_diff));
            vs.names.push_back(panel.indicator_names[i]);
            vs.cols.emplace_back(cols[i].begin() + static_cast<std::ptrdiff_t>(extra),
                                 cols[i].end());
        }
        vs.names.push_back(kLabelName);
        std::vector<double> label_col;
        for (std::size_t y = static_cast<std::size_t>(max_diff); y < panel.n_years(); ++y)
            label_col.push_back(static_cast<double>(panel.label[y]));
        vs.cols.push_back(std::move(label_col));

        out.correlations = pearson_matrix(vs);

        if (!cfg.prune_before_impute) {
            auto pruned = prune_correlated(vs, cfg.prune_threshold, {kLabelName});
            out.pruned = pruned.dropped;
            for (const auto& w : pruned.warnings) out.warnings.push_back(w);
            vs = std::move(pruned.vs);
        }
        if (vs.n_vars() < 2) throw DegenerateError("fewer than 2 usable variables");

        out.matrix = causality_matrix(vs, cfg.granger_max_lag, cfg.alpha_granger);
        for (const auto& w : out.matrix.warnings) out.warnings.push_back("granger: " + w);
        out.granger_edges = extract_edges(out.matrix);

        MarkedGraph sk = skeleton(vs, cfg.alpha_ci, cfg.max_cond);
        out.graph = apply_rules(orient_colliders(sk));
        for (const auto& w : out.graph.warnings) out.warnings.push_back("icstar: " + w);

        LabelAdjacency adj = label_adjacency(out.graph, kLabelName);
        out.findings.country_id = panel.country_id;
        out.findings.granger_label_edges = out.granger_edges.label_incident;
        out.findings.ic_dependence_label = adj.dependence;
        out.findings.ic_genuine_label = adj.genuine;
        out.findings.warnings = out.warnings;

        out.analysis_set = std::move(vs);
        out.ok = true;
    } catch (const Error& e) {
        out.ok = false;
        out.error = e.what();
    }
    return out;
}

// Deterministic worker pool: country i's result lands in slot i no matter
// which thread ran it.
inline std::vector<CountryAnalysis> analyze_all(const PanelDataset& data, const RunConfig& cfg) {
    std::vector<CountryAnalysis> results(data.countries.size());
    unsigned hw = std::thread::hardware_concurrency();
    int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(hw ? hw : 1);
    workers = std::min<int>(workers, static_cast<int>(data.countries.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < data.countries.size(); ++i)
            results[i] = analyze_country(data.countries[i], cfg);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= data.countries.size()) return;
                results[i] = analyze_country(data.countries[i], cfg);
            }
        });
    for (auto& t : pool) t.join();
    return results;
}

// ---------------------------------------------------------------------------
// JSON forms for findings and series metadata
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const GrangerEdge& e) {
    return {{"cause", e.cause}, {"effect", e.effect}, {"p_value", e.p_value}, {"lag", e.lag}};
}

inline nlohmann::json to_json(const CountryFindings& f) {
    nlohmann::json j;
    j["country"] = f.country_id;
    j["granger_label_edges"] = nlohmann::json::array();
    for (const auto& e : f.granger_label_edges) j["granger_label_edges"].push_back(to_json(e));
    j["ic_dependence_label"] = f.ic_dependence_label;
    j["ic_genuine_label"] = f.ic_genuine_label;
    j["warnings"] = f.warnings;
    return j;
}

inline CountryFindings findings_from_json(const nlohmann::json& j) {
    CountryFindings f;
    f.country_id = j.at("country").get<std::string>();
    if (j.contains("granger_label_edges"))
        for (const auto& e : j.at("granger_label_edges"))
            f.granger_label_edges.push_back({e.at("cause").get<std::string>(),
                                             e.at("effect").get<std::string>(),
                                             e.at("p_value").get<double>(),
                                             e.at("lag").get<int>()});
    if (j.contains("ic_dependence_label"))
        for (const auto& s : j.at("ic_dependence_label"))
            f.ic_dependence_label.insert(s.get<std::string>());
    if (j.contains("ic_genuine_label"))
        for (const auto& s : j.at("ic_genuine_label"))
            f.ic_genuine_label.insert(s.get<std::string>());
    if (j.contains("warnings"))
        for (const auto& s : j.at("warnings")) f.warnings.push_back(s.get<std::string>());
    return f;
}

inline nlohmann::json to_json(const std::vector<SeriesMetaEntry>& meta) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : meta)
        arr.push_back({{"indicator", m.indicator},
                       {"transform", to_string(m.transform)},
                       {"diff_order", m.diff_order},
                       {"stationary", m.stationary},
                       {"normal", m.normal}});
    return arr;
}

// ---------------------------------------------------------------------------
// Output tree
// ---------------------------------------------------------------------------

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct RunReport {
    int exit_code = 0;
    int countries_total = 0;
    int countries_ok = 0;
    std::vector<std::string> skipped;  // "id: reason"
    RelationshipCounts counts;
};

// Execute the full chain and write every per-country and global artifact
// under cfg.output_dir. Exit code 0 = clean, 2 = some countries skipped.
inline RunReport run_pipeline(const PanelDataset& input, const RunConfig& cfg) {
    namespace fs = std::filesystem;
    cfg.validate();
    const std::string chash = config_hash(cfg);
    fs::path out_dir(cfg.output_dir);

    PanelDataset data = drop_sparse(input, cfg.sparse_threshold);

    std::vector<CountryAnalysis> analyses = analyze_all(data, cfg);

    RunReport report;
    report.countries_total = static_cast<int>(analyses.size());
    std::vector<CountryFindings> findings;
    nlohmann::json skipped = nlohmann::json::array();

    for (const auto& a : analyses) {
        if (!a.ok) {
            report.skipped.push_back(a.country_id + ": " + a.error);
            skipped.push_back({{"country", a.country_id}, {"reason", a.error}});
            continue;
        }
        ++report.countries_ok;
        findings.push_back(a.findings);

        fs::path cdir = out_dir / "countries" / a.country_id;
        write_text_file(cdir / "causality_matrix.csv",
                        matrix_csv(a.matrix, cfg.matrix_orientation, cfg.matrix_encoding));
        nlohmann::json mj = to_json(a.matrix, cfg.matrix_orientation, cfg.matrix_encoding);
        mj["config_hash"] = chash;
        write_text_file(cdir / "causality_matrix.json", dump_json(mj));

        GraphDocument granger_doc = to_graph_document(a.granger_edges.all, a.matrix.variables);
        write_text_file(cdir / "granger_network.dot", export_dot(granger_doc));
        write_text_file(cdir / "granger_network.json", export_json(granger_doc));

        GraphDocument dep = to_graph_document(a.graph, GraphView::dependence);
        GraphDocument gen = to_graph_document(a.graph, GraphView::genuine);
        write_text_file(cdir / "ic_dependence.dot", export_dot(dep));
        write_text_file(cdir / "ic_dependence.json", export_json(dep));
        write_text_file(cdir / "ic_genuine.dot", export_dot(gen));
        write_text_file(cdir / "ic_genuine.json", export_json(gen));

        write_text_file(cdir / "correlation_heatmap.json", dump_json(heatmap_json(a.correlations)));

        nlohmann::json smeta;
        smeta["config_hash"] = chash;
        smeta["series"] = to_json(a.series_meta);
        smeta["pruned"] = a.pruned;
        if (a.drift_report) {
            nlohmann::json dj;
            dj["variance_delta"] = a.drift_report->variance_delta;
            dj["covariance_frobenius_delta"] = a.drift_report->covariance_frobenius_delta;
            dj["correlation_max_abs_delta"] = a.drift_report->correlation_max_abs_delta;
            smeta["imputation_drift"] = dj;
        }
        write_text_file(cdir / "series_meta.json", dump_json(smeta));
        write_text_file(cdir / "findings.json", dump_json(to_json(a.findings)));
    }

    for (RankMethod m :
         {RankMethod::granger, RankMethod::ic_dependence, RankMethod::ic_genuine}) {
        RankingTable t = rank(findings, m);
        write_text_file(out_dir / ("rankings_" + to_string(m) + ".csv"), ranking_csv(t));
    }
    {
        nlohmann::json j;
        j["config_hash"] = chash;
        for (RankMethod m :
             {RankMethod::granger, RankMethod::ic_dependence, RankMethod::ic_genuine}) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& [name, freq] : rank(findings, m).rows)
                rows.push_back({{"indicator", name}, {"frequency", freq}});
            j[to_string(m)] = rows;
        }
        write_text_file(out_dir / "rankings.json", dump_json(j));
    }

    IntersectionTable inter = intersect(findings, cfg.strict_genuine);
    write_text_file(out_dir / "intersection.csv", intersection_csv(inter));
    {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [country, name] : inter.rows)
            rows.push_back({{"country", country}, {"indicator", name}});
        write_text_file(out_dir / "intersection.json",
                        dump_json({{"config_hash", chash},
                                   {"strict_genuine", cfg.strict_genuine},
                                   {"rows", rows}}));
    }

    report.counts = relationship_counts(findings);
    write_text_file(out_dir / "counts.json",
                    dump_json({{"config_hash", chash},
                               {"granger_total", report.counts.granger_total},
                               {"ic_dependence_total", report.counts.ic_dependence_total},
                               {"ic_genuine_total", report.counts.ic_genuine_total}}));
    write_text_file(out_dir / "skipped.json", dump_json(skipped));

    nlohmann::json meta;
    meta["config"] = to_json(cfg);
    meta["config_hash"] = chash;
    meta["countries_total"] = report.countries_total;
    meta["countries_ok"] = report.countries_ok;
    meta["dropped_sparse_indicators"] = data.dropped_indicators;
    meta["ingest_warnings"] = data.warnings;
    write_text_file(out_dir / "run_meta.json", dump_json(meta));

    report.exit_code = report.countries_ok < report.countries_total ? 2 : 0;
    return report;
}

}  // namespace causalpanel
