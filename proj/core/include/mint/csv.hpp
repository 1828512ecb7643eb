#ifndef MINT_CSV_HPP
#define MINT_CSV_HPP

#include <filesystem>

#include "mint/dataset.hpp"

namespace mint {

enum class FeatureTyping {
    Auto,        // genotype iff every value of the column is in {0,1,2}
    Genotype,    // every column must hold {0,1,2}; anything else is an error
    Continuous,  // no typing checks
};

enum class MissingPolicy {
    Error,       // any NA cell is an error
    ImputeMode,  // NA replaced by the column's most frequent value (ties: smallest)
};

/// Loads a feature matrix CSV: header `sample_id,<feature_id>...`, one row
/// per sample, cells numeric or "NA". Errors name file, row, and column.
Dataset load_features(const std::filesystem::path& path,
                      FeatureTyping typing = FeatureTyping::Auto,
                      MissingPolicy missing = MissingPolicy::Error);

/// Loads a two-column `sample_id,value` CSV and attaches it as `dataset.y`,
/// aligned to the dataset's sample order regardless of file order. Every
/// dataset sample must appear exactly once.
void load_phenotype(const std::filesystem::path& path, Dataset& dataset);

/// Writers use the shortest round-trip decimal representation, so
/// write-then-load reproduces values bit for bit.
void write_features_csv(const std::filesystem::path& path, const Dataset& dataset);
void write_phenotype_csv(const std::filesystem::path& path, const Dataset& dataset);
void write_labels_csv(const std::filesystem::path& path, const Dataset& dataset);

/// Shortest decimal form of `v` that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace mint

#endif
