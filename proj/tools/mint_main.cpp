#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mint/csv.hpp"
#include "mint/errors.hpp"
#include "mint/harness.hpp"
#include "mint/report.hpp"
#include "mint/rng.hpp"
#include "mint/simulate.hpp"
#include "mint/version.hpp"

namespace fs = std::filesystem;
using mint::ValidationError;

namespace {

/// "150,250,350", "150..550" (step 100), or "150..550..50".
std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (item.empty()) throw ValidationError("empty entry in n-list '" + text + "'");
        std::size_t dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                values.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                std::string rest = item.substr(dots + 2);
                std::size_t dots2 = rest.find("..");
                const int hi = std::stoi(dots2 == std::string::npos ? rest : rest.substr(0, dots2));
                const int step = dots2 == std::string::npos ? 100 : std::stoi(rest.substr(dots2 + 2));
                if (step <= 0) throw ValidationError("n-list range step must be positive");
                for (int v = lo; v <= hi; v += step) values.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw ValidationError("cannot parse n-list entry '" + item + "'");
        } catch (const std::out_of_range&) {
            throw ValidationError("n-list entry '" + item + "' out of range");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) throw ValidationError("n-list is empty");
    for (int v : values) {
        if (v < 1) throw ValidationError("n-list values must be positive");
    }
    return values;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            values.push_back(std::stod(item));
        } catch (...) {
            throw ValidationError(std::string("cannot parse ") + what + " entry '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) throw ValidationError(std::string(what) + " is empty");
    return values;
}

mint::FeatureTyping parse_typing(const std::string& name) {
    if (name == "auto") return mint::FeatureTyping::Auto;
    if (name == "genotype") return mint::FeatureTyping::Genotype;
    if (name == "continuous") return mint::FeatureTyping::Continuous;
    throw ValidationError("unknown feature typing '" + name + "'");
}

int default_threads() {
    if (const char* env = std::getenv("MINT_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid MINT_THREADS value '" << env << "'\n";
    }
    return 1;
}

struct SimulateArgs {
    std::string sim_case;
    std::uint64_t seed = 0;
    std::string out_dir;
    int n_samples = 200;
    int n_good = 100;
    double good_noise_var = 100.0;
    int n_seeds = 50;
    double seed_noise_var = 500.0;
    int dups_per_seed = 9;
    double dup_noise_var = 100.0;
    int n_bad = -1;  // -1: case default (1900 / 4500)
    double bad_noise_var = 1000.0;
    double noise_scale = 1.0;
};

int cmd_simulate(const SimulateArgs& args) {
    mint::SimSpec spec = args.sim_case == "one" ? mint::SimSpec::case_one(args.seed)
                                                : mint::SimSpec::case_two(args.seed);
    spec.n_samples = args.n_samples;
    spec.n_good = args.n_good;
    spec.good_noise_var = args.good_noise_var;
    spec.n_seeds = args.n_seeds;
    spec.seed_noise_var = args.seed_noise_var;
    spec.dups_per_seed = args.dups_per_seed;
    spec.dup_noise_var = args.dup_noise_var;
    if (args.n_bad >= 0) spec.n_bad = args.n_bad;
    spec.bad_noise_var = args.bad_noise_var;
    spec.noise_scale = args.noise_scale;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }

    const mint::Dataset data = mint::simulate(spec);
    fs::create_directories(args.out_dir);
    mint::write_features_csv(fs::path(args.out_dir) / "genotypes.csv", data);
    mint::write_phenotype_csv(fs::path(args.out_dir) / "phenotype.csv", data);
    mint::write_labels_csv(fs::path(args.out_dir) / "labels.csv", data);

    nlohmann::ordered_json meta;
    meta["schema_version"] = mint::kReportSchemaVersion;
    meta["tool_version"] = mint::kToolVersion;
    meta["generator"] = mint::kGeneratorIdentity;
    meta["stream_layout"] = "stream 0: target; stream j+1: feature column j";
    nlohmann::ordered_json s;
    s["case"] = args.sim_case;
    s["n_samples"] = spec.n_samples;
    if (spec.sim_case == mint::SimCase::One) {
        s["n_good"] = spec.n_good;
        s["good_noise_var"] = spec.good_noise_var;
    } else {
        s["n_seeds"] = spec.n_seeds;
        s["seed_noise_var"] = spec.seed_noise_var;
        s["dups_per_seed"] = spec.dups_per_seed;
        s["dup_noise_var"] = spec.dup_noise_var;
    }
    s["n_bad"] = spec.n_bad;
    s["bad_noise_var"] = spec.bad_noise_var;
    s["noise_scale"] = spec.noise_scale;
    s["rng_seed"] = spec.rng_seed;
    meta["spec"] = s;
    meta["files"] = {{"genotypes", "genotypes.csv"},
                     {"phenotype", "phenotype.csv"},
                     {"labels", "labels.csv"}};
    mint::write_text_file(fs::path(args.out_dir) / "meta.json", meta.dump(2) + "\n");

    std::cout << "wrote " << data.n_samples() << "x" << data.n_features() << " dataset to "
              << args.out_dir << "\n";
    return 0;
}

struct SelectArgs {
    std::string genotypes, phenotype, test_genotypes, out;
    std::string method;
    int n = 0;
    int bins = 0;
    std::string typing = "auto";
    bool impute_mode = false;
};

int cmd_select(const SelectArgs& args) {
    const auto started = std::chrono::steady_clock::now();
    const mint::Method method = mint::parse_method(args.method);
    if (method == mint::Method::AllFeatures) {
        throw ValidationError("select requires --method mrmr or mint");
    }

    const auto missing =
        args.impute_mode ? mint::MissingPolicy::ImputeMode : mint::MissingPolicy::Error;
    mint::Dataset train = mint::load_features(args.genotypes, parse_typing(args.typing), missing);
    mint::load_phenotype(args.phenotype, train);

    std::optional<mint::Dataset> test;
    if (!args.test_genotypes.empty()) {
        test = mint::load_features(args.test_genotypes, parse_typing(args.typing), missing);
    } else if (method == mint::Method::Mint) {
        std::cerr << "warning: --method mint without --test-genotypes is equivalent to mrmr\n";
    }

    if (static_cast<std::size_t>(args.n) > train.n_features()) {
        throw ValidationError("--n exceeds the feature count " +
                              std::to_string(train.n_features()));
    }

    mint::BinningConfig binning{args.bins};
    const mint::TransductiveView view =
        mint::build_view(train, test ? &*test : nullptr, binning);
    const auto mode = method == mint::Method::Mint ? mint::SelectionMode::Mint
                                                   : mint::SelectionMode::Mrmr;
    const mint::SelectionResult selection =
        mint::select_greedy(view, static_cast<std::size_t>(args.n), mode);

    mint::ReportConfig cfg;
    cfg.add("genotypes", args.genotypes);
    cfg.add("phenotype", args.phenotype);
    cfg.add("test_genotypes", args.test_genotypes);
    cfg.add("method", args.method);
    cfg.add_raw("n", std::to_string(args.n));
    cfg.add_raw("bins", std::to_string(args.bins));
    cfg.add("bins_policy", args.bins == 0 ? "ceil-sqrt-train" : "fixed");
    cfg.add("feature_typing", args.typing);
    cfg.add_raw("impute_mode", args.impute_mode ? "true" : "false");

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    mint::write_text_file(args.out,
                          mint::render_selection_report(train, method, selection, cfg, seconds));
    std::cout << "selected " << selection.ranking.size() << " features ("
              << selection.mi_eval_count << " MI evaluations); report: " << args.out << "\n";
    return 0;
}

struct CvArgs {
    std::string genotypes, phenotype, out;
    std::string methods = "all,mrmr,mint";
    std::string n_list;
    int folds = 10;
    std::uint64_t seed = 0;
    int bins = 0;
    int threads = default_threads();
    std::string lambda_grid;
    std::string typing = "auto";
    bool impute_mode = false;
};

int cmd_cv(const CvArgs& args) {
    const auto missing =
        args.impute_mode ? mint::MissingPolicy::ImputeMode : mint::MissingPolicy::Error;
    mint::Dataset data = mint::load_features(args.genotypes, parse_typing(args.typing), missing);
    mint::load_phenotype(args.phenotype, data);

    mint::ExperimentConfig config;
    for (const std::string& name : CLI::detail::split(args.methods, ',')) {
        config.methods.push_back(mint::parse_method(name));
    }
    const bool needs_n = std::any_of(config.methods.begin(), config.methods.end(),
                                     [](mint::Method m) { return m != mint::Method::AllFeatures; });
    if (!args.n_list.empty()) {
        config.n_features = parse_n_list(args.n_list);
    } else if (needs_n) {
        throw ValidationError("--n-list is required when mrmr or mint is requested");
    }
    config.folds = args.folds;
    config.seed = args.seed;
    config.binning.bins = args.bins;
    config.threads = args.threads;
    if (!args.lambda_grid.empty()) {
        config.lambda_grid = parse_double_list(args.lambda_grid, "lambda grid");
        for (double l : config.lambda_grid) {
            if (!(l > 0)) throw ValidationError("lambda grid values must be positive");
        }
    }
    config.validate(data);

    const mint::ExperimentResult result = mint::run_experiment(data, config);

    mint::ReportConfig cfg;
    cfg.add("genotypes", args.genotypes);
    cfg.add("phenotype", args.phenotype);
    cfg.add("feature_typing", args.typing);
    cfg.add_raw("impute_mode", args.impute_mode ? "true" : "false");
    mint::write_text_file(args.out, mint::render_cv_report(data, config, result, cfg));

    for (const auto& report : result.reports) {
        std::cout << mint::to_string(report.method);
        if (report.method != mint::Method::AllFeatures) std::cout << " n=" << report.n_features;
        std::cout << ": mean r^2 = " << report.mean_r2 << "\n";
    }
    std::cout << "report: " << args.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MINT: transductive max-relevance min-redundancy feature selection"};
    app.set_version_flag("--version", mint::kToolVersion);
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Generate a synthetic benchmark dataset");
    simulate->add_option("--case", sim.sim_case, "Dataset family: one or two")
        ->required()
        ->check(CLI::IsMember({"one", "two"}));
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--out", sim.out_dir, "Output directory")->required();
    simulate->add_option("--n-samples", sim.n_samples)->check(CLI::PositiveNumber);
    simulate->add_option("--n-good", sim.n_good)->check(CLI::PositiveNumber);
    simulate->add_option("--good-noise-var", sim.good_noise_var)->check(CLI::PositiveNumber);
    simulate->add_option("--n-seeds", sim.n_seeds)->check(CLI::PositiveNumber);
    simulate->add_option("--seed-noise-var", sim.seed_noise_var)->check(CLI::PositiveNumber);
    simulate->add_option("--dups-per-seed", sim.dups_per_seed)->check(CLI::PositiveNumber);
    simulate->add_option("--dup-noise-var", sim.dup_noise_var)->check(CLI::PositiveNumber);
    simulate->add_option("--n-bad", sim.n_bad)->check(CLI::PositiveNumber);
    simulate->add_option("--bad-noise-var", sim.bad_noise_var)->check(CLI::PositiveNumber);
    simulate->add_option("--noise-scale", sim.noise_scale,
                         "Multiplier applied to every noise variance")
        ->check(CLI::PositiveNumber);

    SelectArgs sel;
    auto* select = app.add_subcommand("select", "Rank features on one dataset");
    select->add_option("--genotypes", sel.genotypes, "Feature matrix CSV")->required();
    select->add_option("--phenotype", sel.phenotype, "Trait CSV")->required();
    select->add_option("--method", sel.method)->required()->check(CLI::IsMember({"mrmr", "mint"}));
    select->add_option("--n", sel.n, "Number of features to select")
        ->required()
        ->check(CLI::PositiveNumber);
    select->add_option("--test-genotypes", sel.test_genotypes,
                       "Unlabeled feature matrix joining the redundancy term (mint)");
    select->add_option("--bins", sel.bins, "Equal-frequency bin count (0 = ceil(sqrt(n_train)))")
        ->check(CLI::NonNegativeNumber);
    select->add_option("--feature-typing", sel.typing)
        ->check(CLI::IsMember({"auto", "genotype", "continuous"}));
    select->add_flag("--impute-mode", sel.impute_mode, "Replace NA cells by the column mode");
    select->add_option("--out", sel.out, "Report JSON path")->required();

    CvArgs cv;
    auto* cv_cmd = app.add_subcommand("cv", "Cross-validated method comparison");
    cv_cmd->add_option("--genotypes", cv.genotypes)->required();
    cv_cmd->add_option("--phenotype", cv.phenotype)->required();
    cv_cmd->add_option("--methods", cv.methods, "Comma list of all,mrmr,mint");
    cv_cmd->add_option("--n-list", cv.n_list, "Feature counts, e.g. 150,250 or 150..550[..step]");
    cv_cmd->add_option("--folds", cv.folds)->check(CLI::Range(2, 1000));
    cv_cmd->add_option("--seed", cv.seed);
    cv_cmd->add_option("--bins", cv.bins)->check(CLI::NonNegativeNumber);
    cv_cmd->add_option("--threads", cv.threads, "Worker threads (results do not depend on this)")
        ->check(CLI::PositiveNumber);
    cv_cmd->add_option("--lambda-grid", cv.lambda_grid, "Comma list of ridge penalties");
    cv_cmd->add_option("--feature-typing", cv.typing)
        ->check(CLI::IsMember({"auto", "genotype", "continuous"}));
    cv_cmd->add_flag("--impute-mode", cv.impute_mode);
    cv_cmd->add_option("--out", cv.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim);
        if (select->parsed()) return cmd_select(sel);
        if (cv_cmd->parsed()) return cmd_cv(cv);
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
