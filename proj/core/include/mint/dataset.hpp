#ifndef MINT_DATASET_HPP
#define MINT_DATASET_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace mint {

enum class FeatureKind { Genotype, Continuous };

/// Ground-truth class a simulated feature belongs to. Real datasets carry
/// no labels.
enum class TruthLabel { Good, Seed, Duplicate, Bad };

const char* to_string(FeatureKind kind);
const char* to_string(TruthLabel label);

/// Sample-by-feature matrix with stable identifiers, an optional target
/// vector, and per-column typing. Simulated datasets additionally carry
/// ground-truth labels and, for duplicate features, the column index of
/// the seed they were derived from.
struct Dataset {
    std::vector<std::string> sample_ids;
    std::vector<std::string> feature_ids;
    Eigen::MatrixXd X;  // n_samples x n_features
    std::optional<Eigen::VectorXd> y;
    std::vector<FeatureKind> feature_kind;
    std::vector<TruthLabel> truth_labels;   // empty, or one per feature
    std::vector<int> truth_parent;          // -1 except for duplicates

    std::size_t n_samples() const { return sample_ids.size(); }
    std::size_t n_features() const { return feature_ids.size(); }
    bool has_labels() const { return !truth_labels.empty(); }

    /// Throws std::invalid_argument on inconsistent dimensions or
    /// duplicate identifiers.
    void validate() const;
};

}  // namespace mint

#endif
