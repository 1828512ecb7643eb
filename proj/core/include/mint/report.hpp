#ifndef MINT_REPORT_HPP
#define MINT_REPORT_HPP

#include <filesystem>
#include <map>
#include <string>

#include "mint/dataset.hpp"
#include "mint/harness.hpp"

namespace mint {

/// Free-form resolved-configuration entries echoed into the report, in
/// insertion order. Values are serialized as-is (already JSON-encoded
/// scalars or strings).
struct ReportConfig {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, const std::string& string_value);
    void add_raw(const std::string& key, const std::string& json_value);
};

/// Serializes a cross-validation result to the report JSON document:
/// top-level keys schema_version, tool_version, config, results[], timing.
/// Identical inputs produce identical bytes; wall-clock and thread count
/// live only under "timing".
std::string render_cv_report(const Dataset& dataset, const ExperimentConfig& config,
                             const ExperimentResult& result, const ReportConfig& extra_config);

/// Report for a single selection run (the `select` subcommand).
std::string render_selection_report(const Dataset& dataset, Method method,
                                    const SelectionResult& selection,
                                    const ReportConfig& extra_config, double wall_seconds);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace mint

#endif
