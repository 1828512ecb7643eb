#include "mint/regression.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace mint {

namespace {

struct Standardized {
    Eigen::MatrixXd Z;
    Eigen::VectorXd means;
    Eigen::VectorXd scales;
};

// Column-standardizes with sample (n-1) standard deviation. Zero-variance
// columns keep scale 1 and become all-zero, so they draw zero coefficient.
Standardized standardize(const Eigen::MatrixXd& X) {
    const auto n = X.rows();
    Standardized out;
    out.means = X.colwise().mean();
    Eigen::MatrixXd centered = X.rowwise() - out.means.transpose();
    out.scales = (centered.colwise().squaredNorm() / static_cast<double>(n - 1))
                     .cwiseSqrt()
                     .transpose();
    for (Eigen::Index j = 0; j < out.scales.size(); ++j) {
        if (out.scales[j] == 0.0) out.scales[j] = 1.0;
    }
    out.Z = centered.array().rowwise() / out.scales.transpose().array();
    return out;
}

}  // namespace

RidgeModel fit_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda) {
    if (X.rows() != y.size()) throw std::invalid_argument("fit_ridge: X rows != y length");
    if (X.rows() < 2) throw std::invalid_argument("fit_ridge: need at least 2 samples");
    if (X.cols() < 1) throw std::invalid_argument("fit_ridge: need at least 1 feature");
    if (lambda < 0.0 || !std::isfinite(lambda)) {
        throw std::invalid_argument("fit_ridge: lambda must be finite and >= 0");
    }

    Standardized st = standardize(X);
    const double y_mean = y.mean();
    Eigen::VectorXd yc = y.array() - y_mean;

    RidgeModel model;
    model.lambda = lambda;
    model.intercept = y_mean;
    model.feature_means = std::move(st.means);
    model.feature_scales = st.scales;

    const Eigen::Index n = st.Z.rows();
    const Eigen::Index p = st.Z.cols();

    if (lambda == 0.0) {
        // Minimum-norm least squares; exact on full-rank square designs.
        model.coefficients = st.Z.completeOrthogonalDecomposition().solve(yc);
    } else if (p <= n) {
        Eigen::MatrixXd A = st.Z.transpose() * st.Z;
        A.diagonal().array() += lambda;
        model.coefficients = Eigen::LLT<Eigen::MatrixXd>(A).solve(st.Z.transpose() * yc);
    } else {
        // Dual form: beta = Z' (ZZ' + lambda I)^-1 yc, an n x n solve.
        Eigen::MatrixXd K = st.Z * st.Z.transpose();
        K.diagonal().array() += lambda;
        model.coefficients = st.Z.transpose() * Eigen::LLT<Eigen::MatrixXd>(K).solve(yc);
    }
    return model;
}

Eigen::VectorXd predict(const RidgeModel& model, const Eigen::MatrixXd& X) {
    if (X.cols() != model.coefficients.size()) {
        throw std::invalid_argument("predict: feature count does not match the model");
    }
    Eigen::MatrixXd Z = (X.rowwise() - model.feature_means.transpose()).array().rowwise() /
                        model.feature_scales.transpose().array();
    return (Z * model.coefficients).array() + model.intercept;
}

double choose_lambda(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                     std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("choose_lambda: empty grid");
    if (X.rows() != y.size()) throw std::invalid_argument("choose_lambda: X rows != y length");

    std::vector<double> ordered(grid.begin(), grid.end());
    std::sort(ordered.begin(), ordered.end());
    for (double l : ordered) {
        if (l <= 0.0 || !std::isfinite(l)) {
            throw std::invalid_argument("choose_lambda: grid values must be positive and finite");
        }
    }

    Standardized st = standardize(X);
    const double n = static_cast<double>(X.rows());
    Eigen::VectorXd yc = y.array() - y.mean();

    Eigen::BDCSVD<Eigen::MatrixXd> svd(st.Z, Eigen::ComputeThinU);
    const Eigen::VectorXd d2 = svd.singularValues().array().square();
    const Eigen::VectorXd uty = svd.matrixU().transpose() * yc;
    const double total_ss = yc.squaredNorm();
    // Residual component orthogonal to the column space, constant in lambda.
    const double orth_ss = std::max(0.0, total_ss - uty.squaredNorm());

    double best_lambda = ordered.front();
    double best_gcv = std::numeric_limits<double>::infinity();
    for (double lambda : ordered) {
        double rss = orth_ss;
        double edf = 1.0;  // intercept
        for (Eigen::Index i = 0; i < d2.size(); ++i) {
            const double shrink = d2[i] / (d2[i] + lambda);
            edf += shrink;
            const double miss = (1.0 - shrink) * uty[i];
            rss += miss * miss;
        }
        const double denom = n - edf;
        const double gcv = denom > 1e-9 ? n * rss / (denom * denom)
                                        : std::numeric_limits<double>::infinity();
        if (gcv < best_gcv) {
            best_gcv = gcv;
            best_lambda = lambda;
        }
    }
    return best_lambda;
}

double r_squared(const Eigen::VectorXd& y_true, const Eigen::VectorXd& y_pred) {
    if (y_true.size() != y_pred.size()) throw std::invalid_argument("r_squared: length mismatch");
    if (y_true.size() < 2) throw std::invalid_argument("r_squared: need at least 2 values");

    Eigen::VectorXd t = y_true.array() - y_true.mean();
    Eigen::VectorXd p = y_pred.array() - y_pred.mean();
    const double t_ss = t.squaredNorm();
    const double p_ss = p.squaredNorm();
    if (t_ss == 0.0) throw std::invalid_argument("r_squared: y_true is constant");
    if (p_ss == 0.0) {
        std::cerr << "note: constant prediction vector; r^2 defined as 0\n";
        return 0.0;
    }
    const double cov = t.dot(p);
    const double r2 = (cov * cov) / (t_ss * p_ss);
    return std::clamp(r2, 0.0, 1.0);
}

std::vector<double> default_lambda_grid() {
    return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4};
}

}  // namespace mint
