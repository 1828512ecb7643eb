#ifndef MINT_SIMULATE_HPP
#define MINT_SIMULATE_HPP

#include <cstdint>

#include "mint/dataset.hpp"

namespace mint {

enum class SimCase { One, Two };

/// Generator parameters. Noise magnitudes are variances; `noise_scale`
/// multiplies every variance so the overall noise convention can be swept
/// without touching the individual knobs.
struct SimSpec {
    SimCase sim_case = SimCase::One;
    int n_samples = 200;

    // case one
    int n_good = 100;
    double good_noise_var = 100.0;

    // case two
    int n_seeds = 50;
    double seed_noise_var = 500.0;
    int dups_per_seed = 9;
    double dup_noise_var = 100.0;

    // both cases (1900 for case one, 4500 for case two by default)
    int n_bad = 1900;
    double bad_noise_var = 1000.0;

    double noise_scale = 1.0;
    std::uint64_t rng_seed = 0;

    static SimSpec case_one(std::uint64_t seed);
    static SimSpec case_two(std::uint64_t seed);

    int n_features() const;

    /// Throws std::invalid_argument on non-positive counts or variances.
    void validate() const;
};

/// Target Y ~ U(0,1) i.i.d.; features are Y plus feature-class noise.
/// Case one: n_good good columns and n_bad bad columns. Case two: seed
/// columns, then duplicates grouped seed-major (duplicate = its seed plus
/// fresh noise), then bad columns. One PRNG stream per column, target
/// stream first, so output is bitwise reproducible for a given seed.
Dataset simulate(const SimSpec& spec);

}  // namespace mint

#endif
