#ifndef MINT_DISCRETIZE_HPP
#define MINT_DISCRETIZE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mint {

enum class BinningStrategy {
    /// Values are already small-alphabet integers (e.g. genotype codes
    /// {0,1,2}); they are relabeled to a dense alphabet, nothing else.
    PassthroughInteger,
    /// Codes assigned by ascending quantile rank; ties stay in the lower bin.
    EqualFrequency,
};

struct BinningSpec {
    BinningStrategy strategy = BinningStrategy::EqualFrequency;
    int bin_count = 1;  // equal-frequency only

    static BinningSpec passthrough() { return {BinningStrategy::PassthroughInteger, 1}; }
    static BinningSpec equal_frequency(int bins) { return {BinningStrategy::EqualFrequency, bins}; }
};

/// Integer-coded column over a dense alphabet 0..cardinality-1, plus the
/// per-symbol counts every entropy/MI computation needs.
class DiscreteColumn {
public:
    DiscreteColumn() = default;

    /// Relabels arbitrary non-negative symbols to a dense alphabet,
    /// preserving symbol order, and tallies counts.
    static DiscreteColumn from_codes(const std::vector<std::uint32_t>& raw);

    std::size_t size() const { return codes_.size(); }
    int cardinality() const { return static_cast<int>(counts_.size()); }
    const std::vector<std::uint16_t>& codes() const { return codes_; }
    const std::vector<std::uint32_t>& symbol_counts() const { return counts_; }

    bool operator==(const DiscreteColumn& other) const = default;

private:
    std::vector<std::uint16_t> codes_;
    std::vector<std::uint32_t> counts_;
};

/// Deterministic discretization; equal values always map to the same code.
/// Equal-frequency assigns floor(rank * bins / n) by sorted position, with
/// every member of a tie group taking the bin of the group's first position.
DiscreteColumn discretize(std::span<const double> values, const BinningSpec& spec);

/// Codes `values` with bins fitted on `fit_values` only. A value takes the
/// bin of the largest fitted value not above it (below-range values take
/// bin 0), so rows shared with the fitted set keep their codes and extra
/// rows never move the bin edges.
DiscreteColumn discretize_with_reference(std::span<const double> values,
                                         std::span<const double> fit_values,
                                         const BinningSpec& spec);

}  // namespace mint

#endif
