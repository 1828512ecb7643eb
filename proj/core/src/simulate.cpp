#include "mint/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mint/rng.hpp"

namespace mint {

namespace {

std::string zero_padded(int value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

void fill_noise(Eigen::Ref<Eigen::VectorXd> column, Xoshiro256pp& rng, double variance) {
    const double sd = std::sqrt(variance);
    for (Eigen::Index i = 0; i < column.size(); ++i) column[i] += sd * rng.normal();
}

}  // namespace

SimSpec SimSpec::case_one(std::uint64_t seed) {
    SimSpec spec;
    spec.sim_case = SimCase::One;
    spec.n_bad = 1900;
    spec.rng_seed = seed;
    return spec;
}

SimSpec SimSpec::case_two(std::uint64_t seed) {
    SimSpec spec;
    spec.sim_case = SimCase::Two;
    spec.n_bad = 4500;
    spec.rng_seed = seed;
    return spec;
}

int SimSpec::n_features() const {
    if (sim_case == SimCase::One) return n_good + n_bad;
    return n_seeds * (1 + dups_per_seed) + n_bad;
}

void SimSpec::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0)) throw std::invalid_argument(std::string(name) + " must be positive");
    };
    positive(n_samples, "n_samples");
    positive(noise_scale, "noise_scale");
    positive(bad_noise_var, "bad_noise_var");
    positive(n_bad, "n_bad");
    if (sim_case == SimCase::One) {
        positive(n_good, "n_good");
        positive(good_noise_var, "good_noise_var");
    } else {
        positive(n_seeds, "n_seeds");
        positive(seed_noise_var, "seed_noise_var");
        positive(dups_per_seed, "dups_per_seed");
        positive(dup_noise_var, "dup_noise_var");
    }
}

Dataset simulate(const SimSpec& spec) {
    spec.validate();
    const int n = spec.n_samples;
    const int p = spec.n_features();

    Dataset data;
    data.sample_ids.reserve(n);
    for (int i = 0; i < n; ++i) data.sample_ids.push_back("s" + zero_padded(i, 4));

    data.X.resize(n, p);
    data.feature_ids.resize(p);
    data.feature_kind.assign(p, FeatureKind::Continuous);
    data.truth_labels.resize(p);
    data.truth_parent.assign(p, -1);

    // Stream 0 is the target; feature column j draws from stream j+1,
    // regardless of the order columns are filled in.
    SplitMix64 stream_seeds(spec.rng_seed);
    const std::uint64_t target_seed = stream_seeds.next();
    std::vector<std::uint64_t> column_seed(p);
    for (int j = 0; j < p; ++j) column_seed[j] = stream_seeds.next();

    Xoshiro256pp target_rng(target_seed);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y[i] = target_rng.uniform01();
    data.y = y;

    auto make_column = [&](int j, TruthLabel label, const std::string& id, double variance,
                           const Eigen::VectorXd& base) {
        data.feature_ids[j] = id;
        data.truth_labels[j] = label;
        data.X.col(j) = base;
        Xoshiro256pp rng(column_seed[j]);
        fill_noise(data.X.col(j), rng, variance * spec.noise_scale);
    };

    if (spec.sim_case == SimCase::One) {
        int j = 0;
        for (int g = 0; g < spec.n_good; ++g, ++j) {
            make_column(j, TruthLabel::Good, "good_" + zero_padded(g, 4), spec.good_noise_var, y);
        }
        for (int b = 0; b < spec.n_bad; ++b, ++j) {
            make_column(j, TruthLabel::Bad, "bad_" + zero_padded(b, 4), spec.bad_noise_var, y);
        }
    } else {
        int j = 0;
        for (int s = 0; s < spec.n_seeds; ++s, ++j) {
            make_column(j, TruthLabel::Seed, "seed_" + zero_padded(s, 3), spec.seed_noise_var, y);
        }
        for (int s = 0; s < spec.n_seeds; ++s) {
            const int parent = s;  // seeds occupy columns 0..n_seeds-1
            for (int d = 0; d < spec.dups_per_seed; ++d, ++j) {
                make_column(j, TruthLabel::Duplicate,
                            "dup_" + zero_padded(s, 3) + "_" + std::to_string(d),
                            spec.dup_noise_var, data.X.col(parent));
                data.truth_parent[j] = parent;
            }
        }
        for (int b = 0; b < spec.n_bad; ++b, ++j) {
            make_column(j, TruthLabel::Bad, "bad_" + zero_padded(b, 4), spec.bad_noise_var, y);
        }
    }

    data.validate();
    return data;
}

}  // namespace mint
