#include "mint/report.hpp"

#include <fstream>

#include <json.hpp>

#include "mint/errors.hpp"
#include "mint/version.hpp"

namespace mint {

namespace {

using ordered_json = nlohmann::ordered_json;

void merge_extra(const ReportConfig& extra, ordered_json& config) {
    for (const auto& [key, value] : extra.entries) {
        config[key] = ordered_json::parse(value);
    }
}

ordered_json base_document() {
    ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool_version"] = kToolVersion;
    return doc;
}

ordered_json dataset_summary(const Dataset& dataset) {
    ordered_json d;
    d["n_samples"] = dataset.n_samples();
    d["n_features"] = dataset.n_features();
    return d;
}

}  // namespace

void ReportConfig::add(const std::string& key, const std::string& string_value) {
    entries.emplace_back(key, ordered_json(string_value).dump());
}

void ReportConfig::add_raw(const std::string& key, const std::string& json_value) {
    entries.emplace_back(key, json_value);
}

std::string render_cv_report(const Dataset& dataset, const ExperimentConfig& config,
                             const ExperimentResult& result, const ReportConfig& extra_config) {
    ordered_json doc = base_document();

    ordered_json cfg;
    cfg["command"] = "cv";
    merge_extra(extra_config, cfg);
    {
        ordered_json methods = ordered_json::array();
        for (Method m : config.methods) methods.push_back(to_string(m));
        cfg["methods"] = methods;
    }
    cfg["n_list"] = config.n_features;
    cfg["folds"] = config.folds;
    cfg["seed"] = config.seed;
    cfg["bins"] = config.binning.bins;
    cfg["bins_policy"] = config.binning.bins == 0 ? "ceil-sqrt-train" : "fixed";
    cfg["lambda_grid"] = config.lambda_grid;
    cfg["dataset"] = dataset_summary(dataset);
    doc["config"] = cfg;

    ordered_json results = ordered_json::array();
    for (const CvReport& report : result.reports) {
        ordered_json entry;
        entry["method"] = to_string(report.method);
        entry["n"] = report.n_features;
        entry["fold_r2"] = report.per_fold_r2;
        entry["mean_r2"] = report.mean_r2;
        ordered_json selected = ordered_json::array();
        for (const auto& fold_selected : report.selected_per_fold) {
            ordered_json ids = ordered_json::array();
            for (std::size_t j : fold_selected) ids.push_back(dataset.feature_ids[j]);
            selected.push_back(ids);
        }
        entry["selected_features"] = selected;
        entry["mi_eval_count"] = report.mi_eval_count;
        results.push_back(entry);
    }
    doc["results"] = results;

    ordered_json timing;
    timing["total_seconds"] = result.wall_seconds;
    timing["threads"] = config.threads;
    doc["timing"] = timing;

    return doc.dump(2) + "\n";
}

std::string render_selection_report(const Dataset& dataset, Method method,
                                    const SelectionResult& selection,
                                    const ReportConfig& extra_config, double wall_seconds) {
    ordered_json doc = base_document();

    ordered_json cfg;
    cfg["command"] = "select";
    merge_extra(extra_config, cfg);
    cfg["dataset"] = dataset_summary(dataset);
    doc["config"] = cfg;

    ordered_json entry;
    entry["method"] = to_string(method);
    entry["n"] = selection.ranking.size();
    ordered_json ids = ordered_json::array();
    for (std::size_t j : selection.ranking) ids.push_back(dataset.feature_ids[j]);
    entry["selected_features"] = ids;
    entry["step_scores"] = selection.step_scores;
    entry["relevance"] = selection.relevance;
    entry["mi_eval_count"] = selection.mi_eval_count;
    doc["results"] = ordered_json::array({entry});

    ordered_json timing;
    timing["total_seconds"] = wall_seconds;
    doc["timing"] = timing;

    return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << content;
}

}  // namespace mint
