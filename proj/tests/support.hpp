#ifndef MINT_TESTS_SUPPORT_HPP
#define MINT_TESTS_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "mint/discretize.hpp"
#include "mint/rng.hpp"
#include "mint/selection.hpp"

namespace support {

/// Random continuous data discretized the same way for train rows and for
/// train+test rows, mimicking how the harness builds fold views. A third
/// of the features are pure noise; the rest lean on a shared target.
inline mint::TransductiveView random_view(mint::Xoshiro256pp& rng, std::size_t m_features,
                                          std::size_t n_train, std::size_t n_test) {
    const int bins = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_train))));
    std::vector<double> y(n_train);
    for (auto& v : y) v = rng.uniform01();

    mint::TransductiveView view;
    view.train_target = mint::discretize(y, mint::BinningSpec::equal_frequency(bins));
    for (std::size_t j = 0; j < m_features; ++j) {
        std::vector<double> col(n_train + n_test);
        const double noise = 0.2 + 2.0 * rng.uniform01();
        const bool informative = rng.below(3) != 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            const double signal = informative && i < n_train ? y[i] : rng.uniform01();
            col[i] = signal + noise * rng.normal();
        }
        std::vector<double> train_part(col.begin(), col.begin() + static_cast<long>(n_train));
        view.train_features.push_back(
            mint::discretize(train_part, mint::BinningSpec::equal_frequency(bins)));
        if (n_test > 0) {
            view.all_features.push_back(
                mint::discretize(col, mint::BinningSpec::equal_frequency(bins)));
        } else {
            view.all_features.push_back(view.train_features.back());
        }
    }
    return view;
}

}  // namespace support

#endif
