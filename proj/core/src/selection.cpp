#include "mint/selection.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mint/infotheory.hpp"

namespace mint {

namespace {

void check_request(const TransductiveView& view, std::size_t n) {
    view.validate();
    if (n == 0) throw std::invalid_argument("must select at least one feature");
    if (n > view.feature_count()) {
        throw std::invalid_argument("cannot select " + std::to_string(n) + " of " +
                                    std::to_string(view.feature_count()) + " features");
    }
}

const std::vector<DiscreteColumn>& redundancy_columns(const TransductiveView& view,
                                                      SelectionMode mode) {
    return mode == SelectionMode::Mint ? view.all_features : view.train_features;
}

// Candidates are scanned in ascending index order with a strictly-greater
// comparison, so ties resolve to the lowest index. NaN never orders.
struct Best {
    double score = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    bool valid = false;

    void consider(double s, std::size_t i) {
        if (std::isnan(s)) {
            throw std::runtime_error("NaN selection score for feature " + std::to_string(i));
        }
        if (!valid || s > score) {
            score = s;
            index = i;
            valid = true;
        }
    }
};

}  // namespace

void TransductiveView::validate() const {
    if (train_features.empty()) throw std::invalid_argument("view has no features");
    if (all_features.size() != train_features.size()) {
        throw std::invalid_argument("train/all feature counts differ");
    }
    const std::size_t n_train = train_target.size();
    if (n_train == 0) throw std::invalid_argument("view has an empty training set");
    const std::size_t n_all = all_features.front().size();
    if (n_all < n_train) throw std::invalid_argument("combined view smaller than training view");
    for (const auto& c : train_features) {
        if (c.size() != n_train) throw std::invalid_argument("training column length mismatch");
    }
    for (const auto& c : all_features) {
        if (c.size() != n_all) throw std::invalid_argument("combined column length mismatch");
    }
}

std::vector<double> relevance_vector(const TransductiveView& view, std::uint64_t* eval_counter) {
    view.validate();
    std::vector<double> rel(view.feature_count());
    for (std::size_t j = 0; j < rel.size(); ++j) {
        rel[j] = mutual_information(view.train_features[j], view.train_target);
        if (eval_counter) ++*eval_counter;
    }
    return rel;
}

SelectionResult select_greedy(const TransductiveView& view, std::size_t n, SelectionMode mode) {
    check_request(view, n);
    const std::size_t m_total = view.feature_count();
    const auto& red_cols = redundancy_columns(view, mode);

    SelectionResult result;
    std::uint64_t evals = 0;
    std::vector<double> relevance = relevance_vector(view, &evals);
    std::vector<double> redundancy_sum(m_total, 0.0);

    std::vector<std::size_t> remaining(m_total);
    std::iota(remaining.begin(), remaining.end(), 0);

    Best first;
    for (std::size_t j : remaining) first.consider(relevance[j], j);
    result.ranking.push_back(first.index);
    result.step_scores.push_back(first.score);
    result.relevance.push_back(relevance[first.index]);
    result.step_eval_counts.push_back(evals);
    std::erase(remaining, first.index);

    for (std::size_t m = 2; m <= n; ++m) {
        const std::size_t last = result.ranking.back();
        Best best;
        for (std::size_t j : remaining) {
            redundancy_sum[j] += mutual_information(red_cols[j], red_cols[last]);
            ++evals;
            best.consider(relevance[j] - redundancy_sum[j] / static_cast<double>(m - 1), j);
        }
        result.ranking.push_back(best.index);
        result.step_scores.push_back(best.score);
        result.relevance.push_back(relevance[best.index]);
        result.step_eval_counts.push_back(evals);
        std::erase(remaining, best.index);
    }

    result.mi_eval_count = evals;
    return result;
}

SelectionResult select_greedy_naive(const TransductiveView& view, std::size_t n,
                                    SelectionMode mode) {
    check_request(view, n);
    const std::size_t m_total = view.feature_count();
    const auto& red_cols = redundancy_columns(view, mode);

    SelectionResult result;
    std::uint64_t evals = 0;
    std::vector<double> relevance = relevance_vector(view, &evals);

    std::vector<std::size_t> remaining(m_total);
    std::iota(remaining.begin(), remaining.end(), 0);

    Best first;
    for (std::size_t j : remaining) first.consider(relevance[j], j);
    result.ranking.push_back(first.index);
    result.step_scores.push_back(first.score);
    result.relevance.push_back(relevance[first.index]);
    result.step_eval_counts.push_back(evals);
    std::erase(remaining, first.index);

    for (std::size_t m = 2; m <= n; ++m) {
        Best best;
        for (std::size_t j : remaining) {
            // Full recomputation, accumulated in selection order so the
            // value matches the incremental route bit for bit.
            double redundancy = 0.0;
            for (std::size_t i : result.ranking) {
                redundancy += mutual_information(red_cols[j], red_cols[i]);
                ++evals;
            }
            best.consider(relevance[j] - redundancy / static_cast<double>(m - 1), j);
        }
        result.ranking.push_back(best.index);
        result.step_scores.push_back(best.score);
        result.relevance.push_back(relevance[best.index]);
        result.step_eval_counts.push_back(evals);
        std::erase(remaining, best.index);
    }

    result.mi_eval_count = evals;
    return result;
}

double phi_score(std::span<const std::size_t> selected, const TransductiveView& view,
                 SelectionMode mode) {
    view.validate();
    if (selected.empty()) throw std::invalid_argument("phi_score of an empty set");
    for (std::size_t i : selected) {
        if (i >= view.feature_count()) {
            throw std::invalid_argument("phi_score: feature index " + std::to_string(i) +
                                        " out of range");
        }
    }
    const auto& red_cols = redundancy_columns(view, mode);
    const double size = static_cast<double>(selected.size());

    double relevance_sum = 0.0;
    for (std::size_t i : selected) {
        relevance_sum += mutual_information(view.train_features[i], view.train_target);
    }

    // Double sum over all ordered pairs, diagonal included.
    double redundancy_sum = 0.0;
    for (std::size_t i : selected) {
        for (std::size_t j : selected) {
            redundancy_sum += mutual_information(red_cols[i], red_cols[j]);
        }
    }
    return relevance_sum / size - redundancy_sum / (size * size);
}

std::uint64_t expected_evals_greedy(std::size_t total_features, std::size_t n_selected) {
    std::uint64_t evals = total_features;
    for (std::size_t m = 2; m <= n_selected; ++m) {
        evals += total_features - m + 1;
    }
    return evals;
}

std::uint64_t expected_evals_naive(std::size_t total_features, std::size_t n_selected) {
    std::uint64_t evals = total_features;
    for (std::size_t m = 2; m <= n_selected; ++m) {
        evals += (m - 1) * (total_features - m + 1);
    }
    return evals;
}

}  // namespace mint
