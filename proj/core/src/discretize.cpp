#include "mint/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mint {

namespace {

constexpr std::uint32_t kMaxCardinality = std::numeric_limits<std::uint16_t>::max();

std::vector<std::uint32_t> passthrough_codes(std::span<const double> values) {
    std::vector<double> distinct(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double v = values[i];
        if (!std::isfinite(v) || v != std::floor(v)) {
            throw std::invalid_argument(
                "passthrough-integer binning requires integral values; got " +
                std::to_string(v) + " at position " + std::to_string(i));
        }
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::uint32_t> codes(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), values[i]);
        codes[i] = static_cast<std::uint32_t>(it - distinct.begin());
    }
    return codes;
}

std::vector<std::uint32_t> equal_frequency_codes(std::span<const double> values, int bins) {
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("equal-frequency binning requires finite values; position " +
                                        std::to_string(i));
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    // Bin of a tie group = bin of its first sorted position (ties stay low).
    std::vector<std::uint32_t> codes(n);
    std::uint32_t current_bin = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (pos == 0 || values[order[pos]] != values[order[pos - 1]]) {
            current_bin = static_cast<std::uint32_t>(
                (pos * static_cast<std::size_t>(bins)) / n);
        }
        codes[order[pos]] = current_bin;
    }
    return codes;
}

}  // namespace

DiscreteColumn DiscreteColumn::from_codes(const std::vector<std::uint32_t>& raw) {
    if (raw.empty()) throw std::invalid_argument("empty column");

    std::uint32_t max_raw = *std::max_element(raw.begin(), raw.end());
    std::vector<std::uint32_t> seen(static_cast<std::size_t>(max_raw) + 1, 0);
    for (auto c : raw) seen[c] = 1;

    // Dense relabeling preserving symbol order.
    std::vector<std::uint32_t> remap(seen.size(), 0);
    std::uint32_t next = 0;
    for (std::size_t s = 0; s < seen.size(); ++s) {
        if (seen[s]) remap[s] = next++;
    }
    if (next > kMaxCardinality) throw std::invalid_argument("column cardinality exceeds 65535");

    DiscreteColumn col;
    col.codes_.resize(raw.size());
    col.counts_.assign(next, 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::uint16_t code = static_cast<std::uint16_t>(remap[raw[i]]);
        col.codes_[i] = code;
        ++col.counts_[code];
    }
    return col;
}

DiscreteColumn discretize(std::span<const double> values, const BinningSpec& spec) {
    if (values.empty()) throw std::invalid_argument("cannot discretize an empty vector");

    switch (spec.strategy) {
        case BinningStrategy::PassthroughInteger:
            return DiscreteColumn::from_codes(passthrough_codes(values));
        case BinningStrategy::EqualFrequency:
            if (spec.bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
            if (static_cast<std::uint32_t>(spec.bin_count) > kMaxCardinality) {
                throw std::invalid_argument("bin_count exceeds 65535");
            }
            return DiscreteColumn::from_codes(equal_frequency_codes(values, spec.bin_count));
    }
    throw std::invalid_argument("unknown binning strategy");
}

DiscreteColumn discretize_with_reference(std::span<const double> values,
                                         std::span<const double> fit_values,
                                         const BinningSpec& spec) {
    if (values.empty()) throw std::invalid_argument("cannot discretize an empty vector");
    if (fit_values.empty()) throw std::invalid_argument("empty reference vector");
    if (spec.strategy == BinningStrategy::PassthroughInteger) {
        // Fitted symbols keep their dense codes; unseen symbols are
        // appended in value order so fitted rows never move.
        const auto fit_codes = passthrough_codes(fit_values);
        std::map<double, std::uint32_t> symbol_code;
        for (std::size_t i = 0; i < fit_values.size(); ++i) symbol_code[fit_values[i]] = fit_codes[i];
        std::uint32_t next = static_cast<std::uint32_t>(symbol_code.size());

        std::vector<double> unseen;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double v = values[i];
            if (!std::isfinite(v) || v != std::floor(v)) {
                throw std::invalid_argument(
                    "passthrough-integer binning requires integral values; got " +
                    std::to_string(v) + " at position " + std::to_string(i));
            }
            if (!symbol_code.count(v)) unseen.push_back(v);
        }
        std::sort(unseen.begin(), unseen.end());
        unseen.erase(std::unique(unseen.begin(), unseen.end()), unseen.end());
        for (double v : unseen) symbol_code[v] = next++;

        std::vector<std::uint32_t> codes(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) codes[i] = symbol_code[values[i]];
        return DiscreteColumn::from_codes(codes);
    }
    if (spec.bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");

    const auto fit_codes = equal_frequency_codes(fit_values, spec.bin_count);

    // Distinct fitted values ascending, with the bin each one landed in.
    std::vector<std::pair<double, std::uint32_t>> edges;
    edges.reserve(fit_values.size());
    for (std::size_t i = 0; i < fit_values.size(); ++i) edges.emplace_back(fit_values[i], fit_codes[i]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::uint32_t> codes(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!std::isfinite(v)) {
            throw std::invalid_argument("equal-frequency binning requires finite values; position " +
                                        std::to_string(i));
        }
        auto it = std::upper_bound(edges.begin(), edges.end(), v,
                                   [](double x, const auto& e) { return x < e.first; });
        codes[i] = it == edges.begin() ? edges.front().second : std::prev(it)->second;
    }
    return DiscreteColumn::from_codes(codes);
}

}  // namespace mint
