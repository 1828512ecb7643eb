#ifndef MINT_REGRESSION_HPP
#define MINT_REGRESSION_HPP

#include <Eigen/Dense>
#include <span>

namespace mint {

/// Ridge fit on internally standardized columns. Coefficients live on the
/// standardized scale; predict() applies the stored means/scales, so the
/// model is self-contained.
struct RidgeModel {
    Eigen::VectorXd coefficients;
    double intercept = 0.0;
    double lambda = 0.0;
    Eigen::VectorXd feature_means;
    Eigen::VectorXd feature_scales;
};

/// Solves (Z'Z + lambda I) beta = Z'y~ on standardized Z and centered y~.
/// Uses the dual n x n system when p > n. lambda = 0 falls back to the
/// minimum-norm least-squares solution (the centered system is always
/// consistent), so full-rank square designs interpolate exactly.
RidgeModel fit_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda);

Eigen::VectorXd predict(const RidgeModel& model, const Eigen::MatrixXd& X);

/// Grid value minimizing generalized cross-validation error
/// n * RSS(lambda) / (n - edf(lambda))^2 with edf = 1 + sum d_i^2/(d_i^2+lambda).
/// Grid is evaluated in ascending order; first minimizer wins ties.
double choose_lambda(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                     std::span<const double> grid);

/// Square of the Pearson correlation between the two vectors, in [0,1].
/// A constant prediction vector scores 0 (with a note on stderr) instead of
/// propagating NaN; a constant y_true is an error.
double r_squared(const Eigen::VectorXd& y_true, const Eigen::VectorXd& y_pred);

/// Default lambda grid: {1e-3, 1e-2, ..., 1e4}.
std::vector<double> default_lambda_grid();

}  // namespace mint

#endif
