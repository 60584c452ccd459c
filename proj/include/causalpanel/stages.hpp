#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "causalpanel/pipeline.hpp"

namespace causalpanel {

// ---------------------------------------------------------------------------
// Stage artifacts. Every stage directory carries a meta.json naming its
// artifact kind; mismatched kinds are hard errors, a merely-unexpected
// predecessor stage is a warning.
//
//   panel          panel.csv (long) + labels.csv        ingest/impute/transform
//   aligned_panel  tables/<country>.csv                 stationarize
//   findings       findings/<country>.json              granger/icstar
// ---------------------------------------------------------------------------

struct ArtifactMeta {
    std::string artifact_kind;
    std::string stage;
    std::string config_hash;
    std::vector<std::string> warnings;
};

inline void write_artifact_meta(const std::filesystem::path& dir, const ArtifactMeta& m) {
    nlohmann::json j;
    j["artifact_kind"] = m.artifact_kind;
    j["stage"] = m.stage;
    j["config_hash"] = m.config_hash;
    j["warnings"] = m.warnings;
    write_text_file(dir / "meta.json", dump_json(j));
}

inline ArtifactMeta read_artifact_meta(const std::filesystem::path& dir) {
    std::ifstream in(dir / "meta.json");
    if (!in) throw StageMismatchError("no meta.json in " + dir.string() +
                                      " (not a stage artifact directory)");
    nlohmann::json j = nlohmann::json::parse(in);
    ArtifactMeta m;
    m.artifact_kind = j.at("artifact_kind").get<std::string>();
    m.stage = j.at("stage").get<std::string>();
    m.config_hash = j.value("config_hash", "");
    if (j.contains("warnings"))
        for (const auto& w : j.at("warnings")) m.warnings.push_back(w.get<std::string>());
    return m;
}

inline ArtifactMeta expect_artifact(const std::filesystem::path& dir, const std::string& kind) {
    ArtifactMeta m = read_artifact_meta(dir);
    if (m.artifact_kind != kind)
        throw StageMismatchError("artifact in " + dir.string() + " has kind '" +
                                 m.artifact_kind + "', expected '" + kind + "'");
    return m;
}

// ---------------------------------------------------------------------------
// Aligned per-country variable tables (post-stationarize)
// ---------------------------------------------------------------------------

inline void write_aligned_tables(const std::filesystem::path& dir,
                                 const std::vector<std::pair<std::string, VariableSet>>& sets) {
    for (const auto& [country, vs] : sets) {
        std::ostringstream os;
        for (std::size_t i = 0; i < vs.names.size(); ++i)
            os << (i ? "," : "") << csv::quote_field(vs.names[i]);
        os << '\n';
        for (std::size_t r = 0; r < vs.n_obs(); ++r) {
            for (std::size_t i = 0; i < vs.names.size(); ++i)
                os << (i ? "," : "") << csv::format_double(vs.cols[i][r]);
            os << '\n';
        }
        write_text_file(dir / "tables" / (country + ".csv"), os.str());
    }
}

inline std::vector<std::pair<std::string, VariableSet>> read_aligned_tables(
    const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir / "tables"))
        if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, VariableSet>> out;
    for (const auto& f : files) {
        auto lines = csv::read_lines(f.string());
        if (lines.empty()) throw ParseError("empty table " + f.string(), 0);
        VariableSet vs;
        vs.names = csv::split_record(lines[0], 1);
        vs.cols.assign(vs.names.size(), {});
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto fields = csv::split_record(lines[i], i + 1);
            if (fields.size() != vs.names.size())
                throw ParseError("row width mismatch in " + f.string(), i + 1);
            for (std::size_t j = 0; j < fields.size(); ++j)
                vs.cols[j].push_back(csv::parse_double(fields[j], i + 1));
        }
        out.emplace_back(f.stem().string(), std::move(vs));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Stage implementations
// ---------------------------------------------------------------------------

inline void stage_ingest(const std::string& panel_path, Layout layout,
                         const std::string& label_path, const std::string& out_dir,
                         const RunConfig& cfg) {
    PanelDataset data = ingest(panel_path, layout, label_path);
    write_dataset(data, out_dir, Layout::long_form);
    write_artifact_meta(out_dir, {"panel", "ingest", config_hash(cfg), data.warnings});
}

inline void stage_impute(const std::string& in_dir, const std::string& out_dir,
                         const RunConfig& cfg) {
    ArtifactMeta meta = expect_artifact(in_dir, "panel");
    PanelDataset data = read_dataset(in_dir, Layout::long_form);
    data = drop_sparse(data, cfg.sparse_threshold);

    std::vector<std::string> warnings;
    for (const auto& name : data.dropped_indicators)
        warnings.push_back("dropped sparse indicator '" + name + "'");

    nlohmann::json drift_all;
    for (auto& panel : data.countries) {
        if (panel.values.complete()) continue;
        std::uint64_t sub = substream_seed(cfg.seed, panel.country_id);
        ImputedPanel imp = impute(panel, cfg.imputation_method, cfg.knn_k, sub);
        for (const auto& w : imp.warnings) warnings.push_back(panel.country_id + ": " + w);
        DriftReport rep = drift(panel, imp);
        drift_all[panel.country_id] = {
            {"variance_delta", rep.variance_delta},
            {"covariance_frobenius_delta", rep.covariance_frobenius_delta},
            {"correlation_max_abs_delta", rep.correlation_max_abs_delta},
            {"noise_clamp_events", imp.noise_clamp_events},
        };
        panel = imp.panel;
    }
    write_dataset(data, out_dir, Layout::long_form);
    write_text_file(std::filesystem::path(out_dir) / "drift_report.json", dump_json(drift_all));
    write_artifact_meta(out_dir, {"panel", "impute", config_hash(cfg), warnings});
}

inline void stage_transform(const std::string& in_dir, const std::string& out_dir,
                            const RunConfig& cfg) {
    ArtifactMeta meta = expect_artifact(in_dir, "panel");
    PanelDataset data = read_dataset(in_dir, Layout::long_form);
    nlohmann::json tags;
    std::vector<std::string> warnings;
    if (meta.stage == "ingest")
        warnings.push_back("input was not imputed; transform requires complete panels");
    for (auto& panel : data.countries) {
        if (!panel.values.complete())
            throw StageMismatchError("transform expects a complete (imputed) panel; country '" +
                                     panel.country_id + "' has missing cells");
        for (std::size_t i = 0; i < panel.n_indicators(); ++i) {
            std::vector<double> series;
            for (std::size_t y = 0; y < panel.n_years(); ++y)
                series.push_back(panel.values.value(i, y));
            ToNormalResult tn = to_normal(series);
            for (std::size_t y = 0; y < panel.n_years(); ++y) panel.values.set(i, y, tn.y[y]);
            tags[panel.country_id][panel.indicator_names[i]] = {
                {"transform", to_string(tn.tag)}, {"normal", tn.normal}};
        }
    }
    write_dataset(data, out_dir, Layout::long_form);
    write_text_file(std::filesystem::path(out_dir) / "transform_tags.json", dump_json(tags));
    write_artifact_meta(out_dir, {"panel", "transform", config_hash(cfg), warnings});
}

inline void stage_stationarize(const std::string& in_dir, const std::string& out_dir,
                               const RunConfig& cfg) {
    ArtifactMeta meta = expect_artifact(in_dir, "panel");
    PanelDataset data = read_dataset(in_dir, Layout::long_form);
    std::vector<std::string> warnings;
    nlohmann::json smeta;
    std::vector<std::pair<std::string, VariableSet>> sets;
    for (const auto& panel : data.countries) {
        if (!panel.values.complete())
            throw StageMismatchError("stationarize expects a complete panel; country '" +
                                     panel.country_id + "' has missing cells");
        std::vector<std::vector<double>> cols(panel.n_indicators());
        int max_diff = 0;
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t i = 0; i < panel.n_indicators(); ++i) {
            std::vector<double> series;
            for (std::size_t y = 0; y < panel.n_years(); ++y)
                series.push_back(panel.values.value(i, y));
            StationarizeResult st = stationarize(series, cfg.adf_kind);
            for (const auto& w : st.warnings)
                warnings.push_back(panel.country_id + "/" + panel.indicator_names[i] + ": " + w);
            entries.push_back({{"indicator", panel.indicator_names[i]},
                               {"diff_order", st.diff_order},
                               {"stationary", st.stationary}});
            max_diff = std::max(max_diff, st.diff_order);
            cols[i] = std::move(st.y);
        }
        smeta[panel.country_id] = entries;

        VariableSet vs;
        for (std::size_t i = 0; i < panel.n_indicators(); ++i) {
            std::size_t extra =
                cols[i].size() - (panel.n_years() - static_cast<std::size_t>(max_diff));
            vs.names.push_back(panel.indicator_names[i]);
            vs.cols.emplace_back(cols[i].begin() + static_cast<std::ptrdiff_t>(extra),
                                 cols[i].end());
        }
        vs.names.push_back(kLabelName);
        std::vector<double> label_col;
        for (std::size_t y = static_cast<std::size_t>(max_diff); y < panel.n_years(); ++y)
            label_col.push_back(static_cast<double>(panel.label[y]));
        vs.cols.push_back(std::move(label_col));
        sets.emplace_back(panel.country_id, std::move(vs));
    }
    write_aligned_tables(out_dir, sets);
    write_text_file(std::filesystem::path(out_dir) / "series_meta.json", dump_json(smeta));
    write_artifact_meta(out_dir, {"aligned_panel", "stationarize", config_hash(cfg), warnings});
}

namespace detail {

// granger/icstar accept either an aligned artifact or (with a warning) a
// complete panel artifact that skipped stationarization.
inline std::vector<std::pair<std::string, VariableSet>> analysis_inputs(
    const std::string& in_dir, std::vector<std::string>& warnings) {
    ArtifactMeta meta = read_artifact_meta(in_dir);
    if (meta.artifact_kind == "aligned_panel") return read_aligned_tables(in_dir);
    if (meta.artifact_kind == "panel") {
        warnings.push_back("input artifact is a raw panel (stage '" + meta.stage +
                           "'), not stationarized; proceeding anyway");
        PanelDataset data = read_dataset(in_dir, Layout::long_form);
        std::vector<std::pair<std::string, VariableSet>> sets;
        for (const auto& panel : data.countries) {
            if (!panel.values.complete())
                throw StageMismatchError("country '" + panel.country_id +
                                         "' has missing cells; run impute first");
            VariableSet vs;
            for (std::size_t i = 0; i < panel.n_indicators(); ++i) {
                vs.names.push_back(panel.indicator_names[i]);
                std::vector<double> col;
                for (std::size_t y = 0; y < panel.n_years(); ++y)
                    col.push_back(panel.values.value(i, y));
                vs.cols.push_back(std::move(col));
            }
            vs.names.push_back(kLabelName);
            std::vector<double> label_col;
            for (int v : panel.label) label_col.push_back(static_cast<double>(v));
            vs.cols.push_back(std::move(label_col));
            sets.emplace_back(panel.country_id, std::move(vs));
        }
        return sets;
    }
    throw StageMismatchError("artifact kind '" + meta.artifact_kind +
                             "' unusable here; expected 'aligned_panel' (or 'panel')");
}

inline VariableSet prune_for_analysis(const VariableSet& in, const RunConfig& cfg,
                                      std::vector<std::string>& warnings,
                                      const std::string& country) {
    auto pruned = prune_correlated(in, cfg.prune_threshold, {kLabelName});
    for (const auto& name : pruned.dropped)
        warnings.push_back(country + ": pruned correlated indicator '" + name + "'");
    for (const auto& w : pruned.warnings) warnings.push_back(country + ": " + w);
    return std::move(pruned.vs);
}

}  // namespace detail

inline void stage_granger(const std::string& in_dir, const std::string& out_dir,
                          const RunConfig& cfg) {
    std::vector<std::string> warnings;
    auto sets = detail::analysis_inputs(in_dir, warnings);
    namespace fs = std::filesystem;
    for (const auto& [country, vs_raw] : sets) {
        VariableSet vs = detail::prune_for_analysis(vs_raw, cfg, warnings, country);
        CausalityMatrix m = causality_matrix(vs, cfg.granger_max_lag, cfg.alpha_granger);
        for (const auto& w : m.warnings) warnings.push_back(country + ": " + w);
        GrangerEdges edges = extract_edges(m);

        write_text_file(fs::path(out_dir) / "matrices" / (country + ".csv"),
                        matrix_csv(m, cfg.matrix_orientation, cfg.matrix_encoding));
        write_text_file(fs::path(out_dir) / "matrices" / (country + ".json"),
                        dump_json(to_json(m, cfg.matrix_orientation, cfg.matrix_encoding)));
        GraphDocument doc = to_graph_document(edges.all, m.variables);
        write_text_file(fs::path(out_dir) / "graphs" / (country + ".dot"), export_dot(doc));

        CountryFindings f;
        f.country_id = country;
        f.granger_label_edges = edges.label_incident;
        write_text_file(fs::path(out_dir) / "findings" / (country + ".json"),
                        dump_json(to_json(f)));
    }
    write_artifact_meta(out_dir, {"findings", "granger", config_hash(cfg), warnings});
}

inline void stage_icstar(const std::string& in_dir, const std::string& out_dir,
                         const RunConfig& cfg) {
    std::vector<std::string> warnings;
    auto sets = detail::analysis_inputs(in_dir, warnings);
    namespace fs = std::filesystem;
    for (const auto& [country, vs_raw] : sets) {
        VariableSet vs = detail::prune_for_analysis(vs_raw, cfg, warnings, country);
        MarkedGraph g = apply_rules(orient_colliders(skeleton(vs, cfg.alpha_ci, cfg.max_cond)));
        for (const auto& w : g.warnings) warnings.push_back(country + ": " + w);

        GraphDocument dep = to_graph_document(g, GraphView::dependence);
        GraphDocument gen = to_graph_document(g, GraphView::genuine);
        write_text_file(fs::path(out_dir) / "graphs" / (country + "_dependence.dot"),
                        export_dot(dep));
        write_text_file(fs::path(out_dir) / "graphs" / (country + "_dependence.json"),
                        export_json(dep));
        write_text_file(fs::path(out_dir) / "graphs" / (country + "_genuine.dot"),
                        export_dot(gen));
        write_text_file(fs::path(out_dir) / "graphs" / (country + "_genuine.json"),
                        export_json(gen));

        LabelAdjacency adj = label_adjacency(g, kLabelName);
        CountryFindings f;
        f.country_id = country;
        f.ic_dependence_label = adj.dependence;
        f.ic_genuine_label = adj.genuine;
        write_text_file(fs::path(out_dir) / "findings" / (country + ".json"),
                        dump_json(to_json(f)));
    }
    write_artifact_meta(out_dir, {"findings", "icstar", config_hash(cfg), warnings});
}

// Merge findings fragments from one or more stage directories (granger,
// icstar) and emit the global tables.
inline void stage_aggregate(const std::vector<std::string>& in_dirs, const std::string& out_dir,
                            const RunConfig& cfg) {
    namespace fs = std::filesystem;
    std::map<std::string, CountryFindings> merged;
    for (const auto& dir : in_dirs) {
        expect_artifact(dir, "findings");
        fs::path fdir = fs::path(dir) / "findings";
        if (!fs::exists(fdir)) continue;
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(fdir))
            if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f);
            CountryFindings cf = findings_from_json(nlohmann::json::parse(in));
            auto& slot = merged.try_emplace(cf.country_id, CountryFindings{cf.country_id})
                             .first->second;
            for (const auto& e : cf.granger_label_edges) slot.granger_label_edges.push_back(e);
            slot.ic_dependence_label.insert(cf.ic_dependence_label.begin(),
                                            cf.ic_dependence_label.end());
            slot.ic_genuine_label.insert(cf.ic_genuine_label.begin(), cf.ic_genuine_label.end());
        }
    }
    std::vector<CountryFindings> findings;
    for (auto& [id, f] : merged) findings.push_back(std::move(f));

    for (RankMethod m :
         {RankMethod::granger, RankMethod::ic_dependence, RankMethod::ic_genuine})
        write_text_file(fs::path(out_dir) / ("rankings_" + to_string(m) + ".csv"),
                        ranking_csv(rank(findings, m)));
    IntersectionTable inter = intersect(findings, cfg.strict_genuine);
    write_text_file(fs::path(out_dir) / "intersection.csv", intersection_csv(inter));
    RelationshipCounts counts = relationship_counts(findings);
    write_text_file(fs::path(out_dir) / "counts.json",
                    dump_json({{"granger_total", counts.granger_total},
                               {"ic_dependence_total", counts.ic_dependence_total},
                               {"ic_genuine_total", counts.ic_genuine_total}}));
    write_artifact_meta(out_dir, {"tables", "aggregate", config_hash(cfg), {}});
}

// ---------------------------------------------------------------------------
// Synthetic batch generation (the test stand-in for the study dataset)
// ---------------------------------------------------------------------------

struct SynthBatchOptions {
    int countries = 3;
    int years = 40;
    int indicators = 5;   // named A, B, C, ...
    int plant_count = 0;  // this many countries (from the first) get A -> label
    std::uint64_t seed = 0;
};

inline std::string synth_indicator_name(int i) {
    std::string name;
    name.push_back(static_cast<char>('A' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    return name;
}

inline GroundTruth synth_country_truth(const SynthBatchOptions& opt, bool planted) {
    GroundTruth truth;
    for (int i = 0; i < opt.indicators; ++i) truth.nodes.push_back(synth_indicator_name(i));
    truth.nodes.push_back(kLabelName);
    for (int i = 0; i < opt.indicators; ++i)
        truth.edges.push_back({truth.nodes[i], truth.nodes[i], 1, 0.5});
    // causal chain among the non-planted indicators: B -> C -> D -> ...
    for (int i = 1; i + 1 < opt.indicators; ++i)
        truth.edges.push_back({truth.nodes[i], truth.nodes[i + 1], 1, 0.4});
    if (planted) truth.edges.push_back({truth.nodes[0], kLabelName, 1, 1.5});
    truth.noise_sd = 1.0;
    truth.label_noise_sd = 0.3;
    return truth;
}

inline std::pair<PanelDataset, std::vector<GroundTruth>> gen_batch(const SynthBatchOptions& opt) {
    if (opt.countries < 1) throw DomainError("gen_batch: countries must be >= 1");
    if (opt.indicators < 2) throw DomainError("gen_batch: indicators must be >= 2");
    PanelDataset data;
    std::vector<GroundTruth> truths;
    for (int c = 0; c < opt.countries; ++c) {
        char idbuf[16];
        std::snprintf(idbuf, sizeof(idbuf), "C%02d", c);
        GroundTruth truth = synth_country_truth(opt, c < opt.plant_count);
        CountryPanel p = gen_var_panel(truth, opt.years,
                                       substream_seed(opt.seed, idbuf), idbuf);
        if (c == 0) {
            data.indicator_names = p.indicator_names;
            data.years = p.years;
        }
        data.countries.push_back(std::move(p));
        truths.push_back(std::move(truth));
    }
    data.validate();
    return {std::move(data), std::move(truths)};
}

inline nlohmann::json to_json(const GroundTruth& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : t.edges)
        edges.push_back(
            {{"src", e.src}, {"dst", e.dst}, {"lag", e.lag}, {"coeff", e.coeff}});
    return {{"nodes", t.nodes},
            {"edges", edges},
            {"noise_sd", t.noise_sd},
            {"label_noise_sd", t.label_noise_sd}};
}

// Write a wide-layout batch plus its ground truth; `run`/`ingest` consume
// the same directory.
inline void stage_synth(const SynthBatchOptions& opt, const std::string& out_dir) {
    auto [data, truths] = gen_batch(opt);
    write_dataset(data, out_dir, Layout::wide_form);
    nlohmann::json truth_json;
    for (std::size_t c = 0; c < truths.size(); ++c)
        truth_json[data.countries[c].country_id] = to_json(truths[c]);
    write_text_file(std::filesystem::path(out_dir) / "truth.json", dump_json(truth_json));
}

}  // namespace causalpanel
