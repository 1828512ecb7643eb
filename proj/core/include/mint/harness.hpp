#ifndef MINT_HARNESS_HPP
#define MINT_HARNESS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mint/dataset.hpp"
#include "mint/folds.hpp"
#include "mint/regression.hpp"
#include "mint/selection.hpp"

namespace mint {

enum class Method { AllFeatures, Mrmr, Mint };

const char* to_string(Method method);
Method parse_method(const std::string& name);  // "all"/"all-features", "mrmr", "mint"

struct BinningConfig {
    /// Bin count for equal-frequency discretization of the target and of
    /// continuous features; 0 means ceil(sqrt(n_train)).
    int bins = 0;

    int resolve(std::size_t n_train) const;
};

struct ExperimentConfig {
    std::vector<Method> methods;
    std::vector<int> n_features;
    int folds = 10;
    std::uint64_t seed = 0;
    BinningConfig binning;
    std::vector<double> lambda_grid = default_lambda_grid();
    int threads = 1;

    void validate(const Dataset& dataset) const;
};

/// Per-(method, n) cross-validation summary.
struct CvReport {
    Method method = Method::AllFeatures;
    int n_features = 0;
    std::vector<double> per_fold_r2;
    double mean_r2 = 0.0;
    std::vector<std::vector<std::size_t>> selected_per_fold;  // ranking order
    std::uint64_t mi_eval_count = 0;
};

struct ExperimentResult {
    FoldPlan plan;
    std::vector<CvReport> reports;
    double wall_seconds = 0.0;
};

/// Discretizes the fold's columns into the view the selector consumes.
/// Training rows use binning fit on training values; when test rows are
/// included, the combined column is re-fit on the combined values.
/// Genotype columns pass through; continuous columns use equal-frequency
/// bins. The target is always fit on training rows only.
TransductiveView build_fold_view(const Dataset& dataset,
                                 std::span<const std::size_t> train_idx,
                                 std::span<const std::size_t> test_idx,
                                 const BinningConfig& binning,
                                 bool include_test_rows);

/// View over a whole training dataset plus an optional unlabeled test
/// dataset (same features, no target). Used by the `select` subcommand;
/// cross-validation uses build_fold_view on row subsets instead.
TransductiveView build_view(const Dataset& train, const Dataset* test,
                            const BinningConfig& binning);

struct FoldOutcome {
    double r2 = 0.0;
    std::vector<std::size_t> selected;  // ranking order; empty for all-features
    RidgeModel model;
    std::uint64_t mi_eval_count = 0;
};

/// Runs one fold of the protocol: select on the out-of-fold rows (the
/// in-fold feature rows join only mint's redundancy view, never the
/// relevance term or the regression), fit ridge with GCV-chosen lambda on
/// the training rows of the selected columns, score r^2 on the fold.
FoldOutcome run_fold(const Dataset& dataset, const FoldPlan& plan, int fold,
                     Method method, int n, const BinningConfig& binning,
                     std::span<const double> lambda_grid);

/// Full grid over (method, n) with selection shared across n values of the
/// same method within a fold (a greedy prefix is a valid smaller run).
/// Results are merged in config order, independent of thread count.
ExperimentResult run_experiment(const Dataset& dataset, const ExperimentConfig& config);

}  // namespace mint

#endif
