#include "mint/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "mint/errors.hpp"

namespace mint {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t row, const std::string& msg) {
    throw ValidationError(path.string() + ":" + std::to_string(row) + ": " + msg);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r') {
        cells.back().pop_back();
    }
    return cells;
}

double parse_number(const std::string& cell, const std::filesystem::path& path, std::size_t row,
                    const std::string& column) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || cell.empty()) {
        fail(path, row, "column '" + column + "': cell '" + cell + "' is not numeric");
    }
    if (!std::isfinite(value)) {
        fail(path, row, "column '" + column + "': non-finite value");
    }
    return value;
}

bool is_genotype_value(double v) { return v == 0.0 || v == 1.0 || v == 2.0; }

/// Most frequent value; ties resolve to the smallest value.
double column_mode(const std::vector<double>& values) {
    std::map<double, std::size_t> counts;
    for (double v : values) ++counts[v];
    double mode = values.front();
    std::size_t best = 0;
    for (const auto& [value, count] : counts) {
        if (count > best) {  // map iterates ascending, so first max = smallest
            best = count;
            mode = value;
        }
    }
    return mode;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    if (lines.empty()) throw ValidationError(path.string() + ": empty file");
    return lines;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

Dataset load_features(const std::filesystem::path& path, FeatureTyping typing,
                      MissingPolicy missing) {
    const auto lines = read_lines(path);

    auto header = split_line(lines[0]);
    if (header.size() < 2 || header[0] != "sample_id") {
        fail(path, 1, "header must start with 'sample_id' followed by feature ids");
    }
    const std::size_t p = header.size() - 1;

    Dataset data;
    data.feature_ids.assign(header.begin() + 1, header.end());

    const std::size_t n = lines.size() - 1;
    if (n == 0) fail(path, 1, "no sample rows");
    data.X.resize(n, p);
    std::vector<std::vector<std::size_t>> missing_cells(p);

    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row_no = r + 2;  // 1-based, after header
        auto cells = split_line(lines[r + 1]);
        if (cells.size() != p + 1) {
            fail(path, row_no,
                 "expected " + std::to_string(p + 1) + " cells, found " +
                     std::to_string(cells.size()));
        }
        data.sample_ids.push_back(cells[0]);
        for (std::size_t j = 0; j < p; ++j) {
            const std::string& cell = cells[j + 1];
            if (cell == "NA") {
                if (missing == MissingPolicy::Error) {
                    fail(path, row_no,
                         "column '" + data.feature_ids[j] +
                             "': missing value (re-run with mode imputation to fill)");
                }
                missing_cells[j].push_back(r);
                data.X(r, j) = std::numeric_limits<double>::quiet_NaN();
            } else {
                data.X(r, j) = parse_number(cell, path, row_no, data.feature_ids[j]);
            }
        }
    }

    for (std::size_t j = 0; j < p; ++j) {
        if (missing_cells[j].empty()) continue;
        std::vector<double> observed;
        for (std::size_t r = 0; r < n; ++r) {
            if (!std::isnan(data.X(r, j))) observed.push_back(data.X(r, j));
        }
        if (observed.empty()) {
            throw ValidationError(path.string() + ": column '" + data.feature_ids[j] +
                                  "' is entirely missing");
        }
        const double mode = column_mode(observed);
        for (std::size_t r : missing_cells[j]) data.X(r, j) = mode;
    }

    data.feature_kind.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        bool all_geno = true;
        std::size_t first_bad_row = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (!is_genotype_value(data.X(r, j))) {
                all_geno = false;
                first_bad_row = r + 2;
                break;
            }
        }
        switch (typing) {
            case FeatureTyping::Genotype:
                if (!all_geno) {
                    fail(path, first_bad_row,
                         "column '" + data.feature_ids[j] + "': genotype value outside {0,1,2}");
                }
                data.feature_kind[j] = FeatureKind::Genotype;
                break;
            case FeatureTyping::Continuous:
                data.feature_kind[j] = FeatureKind::Continuous;
                break;
            case FeatureTyping::Auto:
                data.feature_kind[j] = all_geno ? FeatureKind::Genotype : FeatureKind::Continuous;
                break;
        }
    }

    try {
        data.validate();
    } catch (const std::invalid_argument& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return data;
}

void load_phenotype(const std::filesystem::path& path, Dataset& dataset) {
    const auto lines = read_lines(path);
    auto header = split_line(lines[0]);
    if (header.size() != 2 || header[0] != "sample_id" || header[1] != "value") {
        fail(path, 1, "header must be 'sample_id,value'");
    }

    std::unordered_map<std::string, double> by_id;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        auto cells = split_line(lines[r]);
        if (cells.size() != 2) fail(path, r + 1, "expected 2 cells");
        if (by_id.count(cells[0])) fail(path, r + 1, "duplicate sample '" + cells[0] + "'");
        by_id[cells[0]] = parse_number(cells[1], path, r + 1, "value");
    }

    Eigen::VectorXd y(dataset.n_samples());
    for (std::size_t i = 0; i < dataset.n_samples(); ++i) {
        auto it = by_id.find(dataset.sample_ids[i]);
        if (it == by_id.end()) {
            throw ValidationError(path.string() + ": no trait value for sample '" +
                                  dataset.sample_ids[i] + "'");
        }
        y[i] = it->second;
        by_id.erase(it);
    }
    if (!by_id.empty()) {
        throw ValidationError(path.string() + ": unknown sample '" + by_id.begin()->first + "'");
    }
    dataset.y = y;
}

void write_features_csv(const std::filesystem::path& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << "sample_id";
    for (const auto& id : dataset.feature_ids) out << ',' << id;
    out << '\n';
    for (std::size_t i = 0; i < dataset.n_samples(); ++i) {
        out << dataset.sample_ids[i];
        for (std::size_t j = 0; j < dataset.n_features(); ++j) {
            out << ',' << format_double(dataset.X(i, j));
        }
        out << '\n';
    }
}

void write_phenotype_csv(const std::filesystem::path& path, const Dataset& dataset) {
    if (!dataset.y) throw std::invalid_argument("dataset has no target to write");
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << "sample_id,value\n";
    for (std::size_t i = 0; i < dataset.n_samples(); ++i) {
        out << dataset.sample_ids[i] << ',' << format_double((*dataset.y)[i]) << '\n';
    }
}

void write_labels_csv(const std::filesystem::path& path, const Dataset& dataset) {
    if (!dataset.has_labels()) throw std::invalid_argument("dataset has no truth labels");
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << "feature_id,label,parent\n";
    for (std::size_t j = 0; j < dataset.n_features(); ++j) {
        const int parent = dataset.truth_parent.empty() ? -1 : dataset.truth_parent[j];
        out << dataset.feature_ids[j] << ',' << to_string(dataset.truth_labels[j]) << ','
            << (parent < 0 ? std::string("-") : dataset.feature_ids[parent]) << '\n';
    }
}

}  // namespace mint
