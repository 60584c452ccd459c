// Command-line front end for the causal panel pipeline. Stages can run one
// at a time against on-disk artifacts, or `run` executes the whole chain.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causalpanel/causalpanel.hpp"

namespace cp = causalpanel;

namespace {

struct CliOptions {
    cp::RunConfig cfg;
    std::string config_file;

    std::string imputation_method = "msreg";
    std::string adf_kind = "constant";
    std::string matrix_orientation = "row_effect";
    std::string matrix_encoding = "p_value";
};

void add_config_flags(CLI::App* app, CliOptions& o) {
    app->add_option("--imputation-method", o.imputation_method,
                    "random | knn | msreg");
    app->add_option("--knn-k", o.cfg.knn_k, "neighbors for KNN imputation");
    app->add_option("--sparse-threshold", o.cfg.sparse_threshold,
                    "drop indicators with missing fraction above this");
    app->add_flag("--transform,!--no-transform", o.cfg.transform_enabled,
                  "apply the normality transform stage");
    app->add_option("--adf-kind", o.adf_kind, "none | constant | constant_trend");
    app->add_option("--granger-max-lag", o.cfg.granger_max_lag, "max Granger lag");
    app->add_option("--alpha-granger", o.cfg.alpha_granger, "Granger significance level");
    app->add_option("--alpha-ci", o.cfg.alpha_ci, "IC* CI-test significance level");
    app->add_option("--max-cond", o.cfg.max_cond, "max IC* conditioning-set size");
    app->add_option("--prune-threshold", o.cfg.prune_threshold,
                    "|r| threshold for correlation pruning");
    app->add_flag("--prune-first", o.cfg.prune_before_impute,
                  "prune correlated indicators before imputation instead of after");
    app->add_option("--matrix-orientation", o.matrix_orientation, "row_effect | row_cause");
    app->add_option("--matrix-encoding", o.matrix_encoding, "p_value | one_minus_p");
    app->add_flag("--strict-genuine", o.cfg.strict_genuine,
                  "intersection uses IC* genuine edges only");
    app->add_option("--seed", o.cfg.seed, "master seed");
    app->add_option("--workers", o.cfg.workers, "concurrent countries (0 = auto)");
    app->add_option("--config", o.config_file,
                    "key=value config file; overrides command-line flags");
}

cp::RunConfig finalize(CliOptions& o) {
    o.cfg.imputation_method = cp::impute_method_from_string(o.imputation_method);
    o.cfg.adf_kind = cp::adf_kind_from_string(o.adf_kind);
    o.cfg.matrix_orientation = cp::matrix_orientation_from_string(o.matrix_orientation);
    o.cfg.matrix_encoding = cp::matrix_encoding_from_string(o.matrix_encoding);
    if (!o.config_file.empty()) cp::apply_config_file(o.cfg, o.config_file);
    o.cfg.validate();
    return o.cfg;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal_panel: development-indicator / outbreak causal analysis"};
    app.require_subcommand(1);

    CliOptions o;
    if (const char* env = std::getenv("CAUSAL_PANEL_SEED"))
        o.cfg.seed = std::strtoull(env, nullptr, 10);

    std::string panel_path, label_path, layout = "long", in_dir, out_dir = "out";
    std::vector<std::string> in_dirs;

    auto* ingest = app.add_subcommand("ingest", "read panel + label CSVs into an artifact");
    ingest->add_option("--panel", panel_path, "panel CSV (long) or directory (wide)")
        ->required();
    ingest->add_option("--labels", label_path, "label CSV")->required();
    ingest->add_option("--layout", layout, "long | wide");
    ingest->add_option("--out", out_dir, "output artifact directory")->required();
    add_config_flags(ingest, o);

    auto* impute = app.add_subcommand("impute", "fill missing cells per country");
    impute->add_option("--in", in_dir, "panel artifact directory")->required();
    impute->add_option("--out", out_dir, "output artifact directory")->required();
    add_config_flags(impute, o);

    auto* transform = app.add_subcommand("transform", "normality transform per indicator");
    transform->add_option("--in", in_dir, "panel artifact directory")->required();
    transform->add_option("--out", out_dir, "output artifact directory")->required();
    add_config_flags(transform, o);

    auto* stationarize = app.add_subcommand("stationarize",
                                            "ADF test + differencing, aligned output");
    stationarize->add_option("--in", in_dir, "panel artifact directory")->required();
    stationarize->add_option("--out", out_dir, "output artifact directory")->required();
    add_config_flags(stationarize, o);

    auto* granger = app.add_subcommand("granger", "pairwise Granger causality matrices");
    granger->add_option("--in", in_dir, "aligned panel artifact")->required();
    granger->add_option("--out", out_dir, "output artifact directory")->required();
    add_config_flags(granger, o);

    auto* icstar = app.add_subcommand("icstar", "IC* causal discovery graphs");
    icstar->add_option("--in", in_dir, "aligned panel artifact")->required();
    icstar->add_option("--out", out_dir, "output artifact directory")->required();
    add_config_flags(icstar, o);

    auto* aggregate = app.add_subcommand("aggregate",
                                         "merge findings into frequency-ranked tables");
    aggregate->add_option("--in", in_dirs, "findings artifact directories")
        ->required()
        ->expected(-1);
    aggregate->add_option("--out", out_dir, "output directory")->required();
    add_config_flags(aggregate, o);

    cp::SynthBatchOptions synth_opt;
    auto* synth = app.add_subcommand("synth", "generate a synthetic country batch");
    synth->add_option("--countries", synth_opt.countries, "number of countries");
    synth->add_option("--years", synth_opt.years, "years per country");
    synth->add_option("--indicators", synth_opt.indicators, "indicators per country");
    synth->add_option("--plant-count", synth_opt.plant_count,
                      "countries whose label gets indicator A as a parent");
    synth->add_option("--seed", synth_opt.seed, "generation seed");
    synth->add_option("--out", out_dir, "output directory (wide layout + truth.json)")
        ->required();

    auto* run = app.add_subcommand("run", "full pipeline: ingest through aggregate");
    run->add_option("--panel", panel_path, "panel CSV (long) or directory (wide)")->required();
    run->add_option("--labels", label_path, "label CSV")->required();
    run->add_option("--layout", layout, "long | wide");
    run->add_option("--out", out_dir, "output directory");
    add_config_flags(run, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed()) {
            cp::RunConfig cfg = finalize(o);
            cp::stage_ingest(panel_path, cp::layout_from_string(layout), label_path, out_dir,
                             cfg);
        } else if (impute->parsed()) {
            cp::stage_impute(in_dir, out_dir, finalize(o));
        } else if (transform->parsed()) {
            cp::stage_transform(in_dir, out_dir, finalize(o));
        } else if (stationarize->parsed()) {
            cp::stage_stationarize(in_dir, out_dir, finalize(o));
        } else if (granger->parsed()) {
            cp::stage_granger(in_dir, out_dir, finalize(o));
        } else if (icstar->parsed()) {
            cp::stage_icstar(in_dir, out_dir, finalize(o));
        } else if (aggregate->parsed()) {
            cp::stage_aggregate(in_dirs, out_dir, finalize(o));
        } else if (synth->parsed()) {
            cp::stage_synth(synth_opt, out_dir);
        } else if (run->parsed()) {
            cp::RunConfig cfg = finalize(o);
            cfg.output_dir = out_dir;
            cp::PanelDataset data =
                cp::ingest(panel_path, cp::layout_from_string(layout), label_path);
            print_warnings(data.warnings);
            cp::RunReport report = cp::run_pipeline(data, cfg);
            std::cout << "countries analyzed: " << report.countries_ok << "/"
                      << report.countries_total << "\n";
            for (const auto& s : report.skipped) std::cerr << "skipped " << s << "\n";
            std::cout << "label relationships: granger=" << report.counts.granger_total
                      << " ic_dependence=" << report.counts.ic_dependence_total
                      << " ic_genuine=" << report.counts.ic_genuine_total << "\n";
            return report.exit_code;
        }
    } catch (const cp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
