#ifndef MINT_INFOTHEORY_HPP
#define MINT_INFOTHEORY_HPP

#include "mint/discretize.hpp"

namespace mint {

/// Plug-in entropy in bits: H = log2(n) - (1/n) * sum_s c_s * log2(c_s).
double entropy(const DiscreteColumn& col);

/// Plug-in mutual information in bits over the empirical joint histogram.
/// Exactly symmetric in its arguments (the pair is put into a canonical
/// order before accumulation), never negative, and exactly zero when
/// either column is constant.
double mutual_information(const DiscreteColumn& a, const DiscreteColumn& b);

}  // namespace mint

#endif
