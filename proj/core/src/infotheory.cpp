#include "mint/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mint {

namespace {

// log2 of integer counts, cached per thread. All MI terms reduce to
// combinations of these, which keeps the hot loop free of log calls.
const double* log2_table(std::size_t up_to) {
    thread_local std::vector<double> table{0.0, 0.0};  // log2(0) unused, log2(1)=0
    while (table.size() <= up_to) {
        table.push_back(std::log2(static_cast<double>(table.size())));
    }
    return table.data();
}

// Deterministic argument order so that mutual_information(a,b) and
// mutual_information(b,a) run the identical accumulation.
bool should_swap(const DiscreteColumn& a, const DiscreteColumn& b) {
    if (a.cardinality() != b.cardinality()) return b.cardinality() < a.cardinality();
    return std::lexicographical_compare(b.codes().begin(), b.codes().end(),
                                        a.codes().begin(), a.codes().end());
}

}  // namespace

double entropy(const DiscreteColumn& col) {
    const std::size_t n = col.size();
    if (n == 0) throw std::invalid_argument("entropy of an empty column");
    const double* lg = log2_table(n);

    double sum = 0.0;
    for (std::uint32_t c : col.symbol_counts()) sum += static_cast<double>(c) * lg[c];
    double h = lg[n] - sum / static_cast<double>(n);
    return h < 0.0 ? 0.0 : h;
}

double mutual_information(const DiscreteColumn& a, const DiscreteColumn& b) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("mutual information of empty columns");
    if (b.size() != n) throw std::invalid_argument("mutual information length mismatch");
    if (a.cardinality() == 1 || b.cardinality() == 1) return 0.0;

    const bool swap = should_swap(a, b);
    const DiscreteColumn& row = swap ? b : a;
    const DiscreteColumn& col = swap ? a : b;

    const std::size_t ca = static_cast<std::size_t>(row.cardinality());
    const std::size_t cb = static_cast<std::size_t>(col.cardinality());

    thread_local std::vector<std::uint32_t> joint;
    joint.assign(ca * cb, 0);
    const auto& rc = row.codes();
    const auto& cc = col.codes();
    for (std::size_t i = 0; i < n; ++i) {
        ++joint[static_cast<std::size_t>(rc[i]) * cb + cc[i]];
    }

    // I = (1/n) * sum c_st * (lg c_st + lg n - lg c_s - lg c_t)
    const double* lg = log2_table(n);
    const auto& row_counts = row.symbol_counts();
    const auto& col_counts = col.symbol_counts();
    double sum = 0.0;
    for (std::size_t s = 0; s < ca; ++s) {
        const double lg_s = lg[row_counts[s]];
        const std::uint32_t* cell = joint.data() + s * cb;
        for (std::size_t t = 0; t < cb; ++t) {
            std::uint32_t c = cell[t];
            if (c != 0) {
                sum += static_cast<double>(c) * (lg[c] + lg[n] - lg_s - lg[col_counts[t]]);
            }
        }
    }
    double mi = sum / static_cast<double>(n);
    return mi < 0.0 ? 0.0 : mi;  // plug-in MI is analytically non-negative
}

}  // namespace mint
