#include "mint/folds.hpp"

#include <numeric>
#include <stdexcept>

#include "mint/rng.hpp"

namespace mint {

std::vector<std::size_t> FoldPlan::fold_indices(int fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] == fold) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> FoldPlan::complement_indices(int fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] != fold) out.push_back(i);
    }
    return out;
}

FoldPlan make_folds(std::size_t n_samples, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("need at least 2 folds");
    if (n_samples < static_cast<std::size_t>(k)) {
        throw std::invalid_argument("fewer samples than folds");
    }

    std::vector<std::size_t> order(n_samples);
    std::iota(order.begin(), order.end(), 0);
    Xoshiro256pp rng(seed);
    for (std::size_t i = n_samples - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(order[i], order[j]);
    }

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignment.assign(n_samples, 0);

    // Contiguous chunks of the shuffled order; the first n % k folds take
    // the extra sample.
    const std::size_t base = n_samples / static_cast<std::size_t>(k);
    const std::size_t extra = n_samples % static_cast<std::size_t>(k);
    std::size_t pos = 0;
    for (int f = 0; f < k; ++f) {
        const std::size_t size = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
        for (std::size_t s = 0; s < size; ++s) plan.assignment[order[pos++]] = f;
    }
    return plan;
}

}  // namespace mint
