#ifndef MINT_SELECTION_HPP
#define MINT_SELECTION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mint/discretize.hpp"

namespace mint {

enum class SelectionMode {
    Mrmr,  // relevance and redundancy both on training rows
    Mint,  // redundancy on training+test rows, relevance untouched
};

/// Discretized data as the greedy selector consumes it. `train_features`
/// cover training rows only; `all_features` cover training followed by
/// test rows and collapse to `train_features` when there is no test block.
/// Target codes exist for training rows only; test targets are never
/// represented here.
struct TransductiveView {
    std::vector<DiscreteColumn> train_features;
    std::vector<DiscreteColumn> all_features;
    DiscreteColumn train_target;

    std::size_t feature_count() const { return train_features.size(); }
    std::size_t train_samples() const { return train_target.size(); }
    std::size_t total_samples() const {
        return all_features.empty() ? 0 : all_features.front().size();
    }

    /// Throws std::invalid_argument when the structural invariants fail
    /// (mismatched feature counts, column lengths, or empty training set).
    void validate() const;
};

struct SelectionResult {
    std::vector<std::size_t> ranking;      // chosen feature indices, in order
    std::vector<double> step_scores;       // objective value of each chosen feature
    std::vector<double> relevance;         // I(feature; target) of each chosen feature
    std::vector<std::uint64_t> step_eval_counts;  // cumulative MI evaluations after each step
    std::uint64_t mi_eval_count = 0;       // total MI evaluations performed
};

/// Per-feature I(x_j; c) on training rows. If `eval_counter` is non-null it
/// is incremented once per MI evaluation.
std::vector<double> relevance_vector(const TransductiveView& view,
                                     std::uint64_t* eval_counter = nullptr);

/// Greedy incremental selection. Step 1 takes the most relevant feature;
/// step m takes argmax_j relevance[j] - redundancy_sum[j]/(m-1), where the
/// redundancy sum is maintained incrementally (one MI evaluation per
/// remaining candidate per step). Ties break toward the lowest index.
SelectionResult select_greedy(const TransductiveView& view, std::size_t n, SelectionMode mode);

/// Reference implementation that recomputes every redundancy sum from
/// scratch each step. Bitwise-identical rankings and scores to
/// select_greedy; intended for equivalence testing at small sizes.
SelectionResult select_greedy_naive(const TransductiveView& view, std::size_t n, SelectionMode mode);

/// Mean relevance minus mean pairwise redundancy of a feature set,
/// with the redundancy double sum taken over all ordered pairs including
/// the diagonal.
double phi_score(std::span<const std::size_t> selected, const TransductiveView& view,
                 SelectionMode mode);

/// Expected MI-evaluation totals for the two selection routes.
std::uint64_t expected_evals_greedy(std::size_t total_features, std::size_t n_selected);
std::uint64_t expected_evals_naive(std::size_t total_features, std::size_t n_selected);

}  // namespace mint

#endif
