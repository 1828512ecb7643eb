#include "mint/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "mint/errors.hpp"

namespace mint {

const char* to_string(Method method) {
    switch (method) {
        case Method::AllFeatures: return "all-features";
        case Method::Mrmr: return "mrmr";
        case Method::Mint: return "mint";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "all" || name == "all-features") return Method::AllFeatures;
    if (name == "mrmr") return Method::Mrmr;
    if (name == "mint") return Method::Mint;
    throw ValidationError("unknown method '" + name + "' (expected all, mrmr, or mint)");
}

int BinningConfig::resolve(std::size_t n_train) const {
    if (bins > 0) return bins;
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_train))));
}

void ExperimentConfig::validate(const Dataset& dataset) const {
    if (methods.empty()) throw ValidationError("no methods requested");
    if (!dataset.y) throw ValidationError("dataset has no target");
    if (folds < 2) throw ValidationError("need at least 2 folds");
    if (dataset.n_samples() < static_cast<std::size_t>(folds)) {
        throw ValidationError("fewer samples than folds");
    }
    const bool needs_n = std::any_of(methods.begin(), methods.end(),
                                     [](Method m) { return m != Method::AllFeatures; });
    if (needs_n && n_features.empty()) {
        throw ValidationError("selection methods require at least one n value");
    }
    for (int n : n_features) {
        if (n < 1) throw ValidationError("n values must be positive");
        if (static_cast<std::size_t>(n) > dataset.n_features()) {
            throw ValidationError("n = " + std::to_string(n) + " exceeds the feature count " +
                                  std::to_string(dataset.n_features()));
        }
    }
    if (lambda_grid.empty()) throw ValidationError("empty lambda grid");
    if (binning.bins < 0) throw ValidationError("bins must be >= 0 (0 = automatic)");
}

namespace {

Eigen::MatrixXd gather_matrix(const Eigen::MatrixXd& X, std::span<const std::size_t> rows,
                              std::span<const std::size_t> cols) {
    Eigen::MatrixXd out(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                X(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
        }
    }
    return out;
}

std::vector<std::size_t> all_columns(const Dataset& dataset) {
    std::vector<std::size_t> cols(dataset.n_features());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return cols;
}

BinningSpec feature_spec(FeatureKind kind, int bins) {
    return kind == FeatureKind::Genotype ? BinningSpec::passthrough()
                                         : BinningSpec::equal_frequency(bins);
}

struct RidgeEval {
    double r2 = 0.0;
    RidgeModel model;
};

Eigen::VectorXd gather_vector(const Eigen::VectorXd& v, std::span<const std::size_t> idx) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = v[static_cast<Eigen::Index>(idx[i])];
    }
    return out;
}

RidgeEval ridge_eval(const Dataset& dataset, std::span<const std::size_t> train_idx,
                     std::span<const std::size_t> test_idx,
                     std::span<const std::size_t> columns, std::span<const double> lambda_grid) {
    const Eigen::MatrixXd x_train = gather_matrix(dataset.X, train_idx, columns);
    const Eigen::VectorXd y_train = gather_vector(*dataset.y, train_idx);

    RidgeEval out;
    const double lambda = choose_lambda(x_train, y_train, lambda_grid);
    out.model = fit_ridge(x_train, y_train, lambda);

    const Eigen::MatrixXd x_test = gather_matrix(dataset.X, test_idx, columns);
    const Eigen::VectorXd y_test = gather_vector(*dataset.y, test_idx);
    out.r2 = r_squared(y_test, predict(out.model, x_test));
    return out;
}

std::vector<std::size_t> sorted_columns(std::span<const std::size_t> ranking, std::size_t n) {
    std::vector<std::size_t> cols(ranking.begin(), ranking.begin() + static_cast<long>(n));
    std::sort(cols.begin(), cols.end());
    return cols;
}

void check_target_not_constant(const Eigen::VectorXd& y, int fold) {
    if ((y.array() == y[0]).all()) {
        throw std::invalid_argument("degenerate fold " + std::to_string(fold) +
                                    ": constant training target");
    }
}

}  // namespace

TransductiveView build_fold_view(const Dataset& dataset,
                                 std::span<const std::size_t> train_idx,
                                 std::span<const std::size_t> test_idx,
                                 const BinningConfig& binning, bool include_test_rows) {
    if (!dataset.y) throw std::invalid_argument("dataset has no target");
    if (train_idx.empty()) throw std::invalid_argument("empty training set");
    const int bins = binning.resolve(train_idx.size());

    TransductiveView view;
    std::vector<double> y_train(train_idx.size());
    for (std::size_t i = 0; i < train_idx.size(); ++i) {
        y_train[i] = (*dataset.y)[static_cast<Eigen::Index>(train_idx[i])];
    }
    view.train_target = discretize(y_train, BinningSpec::equal_frequency(bins));

    const bool with_test = include_test_rows && !test_idx.empty();
    view.train_features.reserve(dataset.n_features());
    view.all_features.reserve(dataset.n_features());

    std::vector<double> train_values(train_idx.size());
    std::vector<double> combined(train_idx.size() + (with_test ? test_idx.size() : 0));
    for (std::size_t j = 0; j < dataset.n_features(); ++j) {
        const auto col = dataset.X.col(static_cast<Eigen::Index>(j));
        for (std::size_t i = 0; i < train_idx.size(); ++i) {
            train_values[i] = col[static_cast<Eigen::Index>(train_idx[i])];
        }
        const BinningSpec spec = feature_spec(dataset.feature_kind[j], bins);
        view.train_features.push_back(discretize(train_values, spec));

        if (with_test) {
            std::copy(train_values.begin(), train_values.end(), combined.begin());
            for (std::size_t i = 0; i < test_idx.size(); ++i) {
                combined[train_idx.size() + i] = col[static_cast<Eigen::Index>(test_idx[i])];
            }
            // Bins stay fitted on training rows; test rows are coded with
            // the same edges, so the training rows keep their codes.
            view.all_features.push_back(discretize_with_reference(combined, train_values, spec));
        } else {
            view.all_features.push_back(view.train_features.back());
        }
    }
    return view;
}

TransductiveView build_view(const Dataset& train, const Dataset* test,
                            const BinningConfig& binning) {
    if (!train.y) throw ValidationError("training dataset has no target");
    if (test) {
        if (test->feature_ids != train.feature_ids) {
            throw ValidationError("test dataset feature ids do not match the training dataset");
        }
        if (test->feature_kind != train.feature_kind) {
            throw ValidationError("test dataset feature kinds do not match the training dataset");
        }
    }
    const int bins = binning.resolve(train.n_samples());

    TransductiveView view;
    std::vector<double> y_values((*train.y).data(), (*train.y).data() + train.y->size());
    view.train_target = discretize(y_values, BinningSpec::equal_frequency(bins));

    const std::size_t n_train = train.n_samples();
    const std::size_t n_test = test ? test->n_samples() : 0;
    std::vector<double> train_values(n_train);
    std::vector<double> combined(n_train + n_test);
    for (std::size_t j = 0; j < train.n_features(); ++j) {
        for (std::size_t i = 0; i < n_train; ++i) {
            train_values[i] = train.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        const BinningSpec spec = feature_spec(train.feature_kind[j], bins);
        view.train_features.push_back(discretize(train_values, spec));
        if (n_test > 0) {
            std::copy(train_values.begin(), train_values.end(), combined.begin());
            for (std::size_t i = 0; i < n_test; ++i) {
                combined[n_train + i] =
                    test->X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
            view.all_features.push_back(discretize_with_reference(combined, train_values, spec));
        } else {
            view.all_features.push_back(view.train_features.back());
        }
    }
    return view;
}

FoldOutcome run_fold(const Dataset& dataset, const FoldPlan& plan, int fold, Method method,
                     int n, const BinningConfig& binning, std::span<const double> lambda_grid) {
    const auto train_idx = plan.complement_indices(fold);
    const auto test_idx = plan.fold_indices(fold);

    const auto y_all = *dataset.y;
    Eigen::VectorXd y_train(static_cast<Eigen::Index>(train_idx.size()));
    for (std::size_t i = 0; i < train_idx.size(); ++i) {
        y_train[static_cast<Eigen::Index>(i)] = y_all[static_cast<Eigen::Index>(train_idx[i])];
    }
    check_target_not_constant(y_train, fold);

    FoldOutcome outcome;
    std::vector<std::size_t> columns;
    if (method == Method::AllFeatures) {
        columns = all_columns(dataset);
    } else {
        TransductiveView view = build_fold_view(dataset, train_idx, test_idx, binning,
                                                method == Method::Mint);
        const auto mode =
            method == Method::Mint ? SelectionMode::Mint : SelectionMode::Mrmr;
        SelectionResult sel = select_greedy(view, static_cast<std::size_t>(n), mode);
        outcome.selected = sel.ranking;
        outcome.mi_eval_count = sel.mi_eval_count;
        columns = sorted_columns(sel.ranking, sel.ranking.size());
    }

    RidgeEval eval = ridge_eval(dataset, train_idx, test_idx, columns, lambda_grid);
    outcome.r2 = eval.r2;
    outcome.model = std::move(eval.model);
    return outcome;
}

namespace {

struct SelectionCell {
    SelectionResult selection;
    std::vector<double> r2_per_n;  // aligned with the sorted n list
};

struct FoldCell {
    std::optional<double> all_features_r2;
    std::optional<SelectionCell> mrmr;
    std::optional<SelectionCell> mint;
};

void compute_fold(const Dataset& dataset, const ExperimentConfig& config, const FoldPlan& plan,
                  int fold, const std::vector<int>& n_sorted, FoldCell& cell) {
    const auto train_idx = plan.complement_indices(fold);
    const auto test_idx = plan.fold_indices(fold);

    Eigen::VectorXd y_train(static_cast<Eigen::Index>(train_idx.size()));
    for (std::size_t i = 0; i < train_idx.size(); ++i) {
        y_train[static_cast<Eigen::Index>(i)] = (*dataset.y)[static_cast<Eigen::Index>(train_idx[i])];
    }
    check_target_not_constant(y_train, fold);

    const bool want_all = std::count(config.methods.begin(), config.methods.end(),
                                     Method::AllFeatures) > 0;
    const bool want_mrmr =
        std::count(config.methods.begin(), config.methods.end(), Method::Mrmr) > 0;
    const bool want_mint =
        std::count(config.methods.begin(), config.methods.end(), Method::Mint) > 0;

    if (want_all) {
        cell.all_features_r2 =
            ridge_eval(dataset, train_idx, test_idx, all_columns(dataset), config.lambda_grid).r2;
    }

    auto run_selection_method = [&](Method method) {
        SelectionCell out;
        TransductiveView view = build_fold_view(dataset, train_idx, test_idx, config.binning,
                                                method == Method::Mint);
        const auto mode =
            method == Method::Mint ? SelectionMode::Mint : SelectionMode::Mrmr;
        // One selection at the largest n; smaller n values are prefixes of
        // the same greedy trajectory.
        out.selection = select_greedy(view, static_cast<std::size_t>(n_sorted.back()), mode);
        out.r2_per_n.reserve(n_sorted.size());
        for (int n : n_sorted) {
            const auto cols = sorted_columns(out.selection.ranking, static_cast<std::size_t>(n));
            out.r2_per_n.push_back(
                ridge_eval(dataset, train_idx, test_idx, cols, config.lambda_grid).r2);
        }
        return out;
    };

    if (want_mrmr) cell.mrmr = run_selection_method(Method::Mrmr);
    if (want_mint) cell.mint = run_selection_method(Method::Mint);
}

}  // namespace

ExperimentResult run_experiment(const Dataset& dataset, const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    dataset.validate();
    config.validate(dataset);

    ExperimentResult result;
    result.plan = make_folds(dataset.n_samples(), config.folds, config.seed);

    std::vector<int> n_sorted = config.n_features;
    std::sort(n_sorted.begin(), n_sorted.end());
    n_sorted.erase(std::unique(n_sorted.begin(), n_sorted.end()), n_sorted.end());

    std::vector<FoldCell> cells(static_cast<std::size_t>(config.folds));
    std::vector<std::exception_ptr> errors(cells.size());

    const int threads = std::clamp(config.threads, 1, config.folds);
    std::atomic<int> next_fold{0};
    auto worker = [&]() {
        for (;;) {
            const int fold = next_fold.fetch_add(1);
            if (fold >= config.folds) return;
            try {
                compute_fold(dataset, config, result.plan, fold, n_sorted,
                             cells[static_cast<std::size_t>(fold)]);
            } catch (...) {
                errors[static_cast<std::size_t>(fold)] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t f = 0; f < errors.size(); ++f) {
        if (errors[f]) {
            try {
                std::rethrow_exception(errors[f]);
            } catch (const std::exception& e) {
                throw std::runtime_error("fold " + std::to_string(f) + ": " + e.what());
            }
        }
    }

    // Deterministic ordered merge: methods in config order, n ascending.
    auto mean_of = [](const std::vector<double>& v) {
        double sum = 0.0;
        for (double x : v) sum += x;
        return sum / static_cast<double>(v.size());
    };

    for (Method method : config.methods) {
        if (method == Method::AllFeatures) {
            CvReport report;
            report.method = method;
            report.n_features = static_cast<int>(dataset.n_features());
            for (const auto& cell : cells) report.per_fold_r2.push_back(*cell.all_features_r2);
            report.mean_r2 = mean_of(report.per_fold_r2);
            report.selected_per_fold.assign(cells.size(), {});
            report.mi_eval_count = 0;
            result.reports.push_back(std::move(report));
            continue;
        }
        for (std::size_t ni = 0; ni < n_sorted.size(); ++ni) {
            const int n = n_sorted[ni];
            CvReport report;
            report.method = method;
            report.n_features = n;
            for (const auto& cell : cells) {
                const SelectionCell& sc = method == Method::Mrmr ? *cell.mrmr : *cell.mint;
                report.per_fold_r2.push_back(sc.r2_per_n[ni]);
                report.selected_per_fold.emplace_back(
                    sc.selection.ranking.begin(),
                    sc.selection.ranking.begin() + static_cast<long>(n));
                report.mi_eval_count +=
                    sc.selection.step_eval_counts[static_cast<std::size_t>(n - 1)];
            }
            report.mean_r2 = mean_of(report.per_fold_r2);
            result.reports.push_back(std::move(report));
        }
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace mint
