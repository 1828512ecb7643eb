#include "mint/dataset.hpp"

#include <stdexcept>
#include <unordered_set>

namespace mint {

const char* to_string(FeatureKind kind) {
    return kind == FeatureKind::Genotype ? "genotype" : "continuous";
}

const char* to_string(TruthLabel label) {
    switch (label) {
        case TruthLabel::Good: return "good";
        case TruthLabel::Seed: return "seed";
        case TruthLabel::Duplicate: return "duplicate";
        case TruthLabel::Bad: return "bad";
    }
    return "?";
}

namespace {

void check_unique(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            throw std::invalid_argument(std::string("duplicate ") + what + " id: " + id);
        }
    }
}

}  // namespace

void Dataset::validate() const {
    if (X.rows() != static_cast<Eigen::Index>(sample_ids.size()) ||
        X.cols() != static_cast<Eigen::Index>(feature_ids.size())) {
        throw std::invalid_argument("dataset matrix dimensions do not match id lists");
    }
    check_unique(sample_ids, "sample");
    check_unique(feature_ids, "feature");
    if (feature_kind.size() != feature_ids.size()) {
        throw std::invalid_argument("feature_kind size mismatch");
    }
    if (y && y->size() != X.rows()) throw std::invalid_argument("target length mismatch");
    if (!truth_labels.empty() && truth_labels.size() != feature_ids.size()) {
        throw std::invalid_argument("truth label count mismatch");
    }
    if (!truth_parent.empty() && truth_parent.size() != feature_ids.size()) {
        throw std::invalid_argument("truth parent count mismatch");
    }
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
        if (feature_kind[j] != FeatureKind::Genotype) continue;
        for (Eigen::Index i = 0; i < X.rows(); ++i) {
            double v = X(i, j);
            if (v != 0.0 && v != 1.0 && v != 2.0) {
                throw std::invalid_argument("genotype column " + feature_ids[j] +
                                            " holds a value outside {0,1,2}");
            }
        }
    }
}

}  // namespace mint
