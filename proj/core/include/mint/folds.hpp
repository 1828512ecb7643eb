#ifndef MINT_FOLDS_HPP
#define MINT_FOLDS_HPP

#include <cstdint>
#include <vector>

namespace mint {

/// Deterministic partition of samples into k near-equal folds.
struct FoldPlan {
    std::vector<int> assignment;  // sample index -> fold id
    int k = 0;
    std::uint64_t seed = 0;

    /// Sample indices of one fold, ascending.
    std::vector<std::size_t> fold_indices(int fold) const;
    /// Sample indices outside one fold, ascending.
    std::vector<std::size_t> complement_indices(int fold) const;
};

/// Seeded uniform shuffle followed by contiguous chunking; fold sizes
/// differ by at most one. n_samples < k is an error.
FoldPlan make_folds(std::size_t n_samples, int k, std::uint64_t seed);

}  // namespace mint

#endif
