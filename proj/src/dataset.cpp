#include "sdw/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace sdw {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        std::string cell = line.substr(start, pos == std::string::npos ? pos : pos - start);
        // trim ASCII whitespace; the dialect has no quoting
        const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        while (!cell.empty() && is_ws(cell.front())) cell.erase(cell.begin());
        while (!cell.empty() && is_ws(cell.back())) cell.pop_back();
        cells.push_back(std::move(cell));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return cells;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

double parse_cell(const std::string& cell, const std::string& origin, const std::string& row,
                  const std::string& col) {
    double v = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError(origin + ": cannot parse \"" + cell + "\" as a number (row " +
                              row + ", column " + col + ")");
    }
    if (!std::isfinite(v)) {
        throw ValidationError(origin + ": non-finite value (row " + row + ", column " + col + ")");
    }
    return v;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_unique_labels(const std::vector<std::string>& labels, const std::string& origin) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw ValidationError(origin + ": duplicate label \"" + l + "\"");
        }
    }
}

}  // namespace

Dataset::Dataset(std::vector<std::string> labels,
                 std::vector<std::pair<std::string, std::vector<double>>> columns)
    : labels_(std::move(labels)), columns_(std::move(columns)) {
    check_unique_labels(labels_, "dataset");
    for (const auto& [name, values] : columns_) {
        if (values.size() != labels_.size()) {
            throw ValidationError("dataset: column \"" + name + "\" has " +
                                  std::to_string(values.size()) + " values for " +
                                  std::to_string(labels_.size()) + " labels");
        }
        for (double v : values) {
            if (!std::isfinite(v)) {
                throw ValidationError("dataset: non-finite value in column \"" + name + "\"");
            }
        }
    }
}

std::vector<std::string> Dataset::column_names() const {
    std::vector<std::string> names;
    names.reserve(columns_.size());
    for (const auto& [name, _] : columns_) names.push_back(name);
    return names;
}

bool Dataset::has_column(const std::string& name) const {
    return std::any_of(columns_.begin(), columns_.end(),
                       [&](const auto& c) { return c.first == name; });
}

const std::vector<double>& Dataset::column(const std::string& name) const {
    for (const auto& [col, values] : columns_) {
        if (col == name) return values;
    }
    throw ValidationError("dataset: no column named \"" + name + "\"");
}

std::string Dataset::to_csv() const {
    std::string out = "label";
    for (const auto& [name, _] : columns_) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        out += labels_[i];
        for (const auto& [_, values] : columns_) {
            out += ',';
            out += format_full(values[i]);
        }
        out += '\n';
    }
    return out;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, Eigen::MatrixXd values)
    : labels_(std::move(labels)), values_(std::move(values)) {
    const int n = static_cast<int>(labels_.size());
    check_unique_labels(labels_, "distance matrix");
    if (values_.rows() != n || values_.cols() != n) {
        throw ValidationError("distance matrix: body is " + std::to_string(values_.rows()) + "x" +
                              std::to_string(values_.cols()) + " for " + std::to_string(n) +
                              " labels");
    }
    if (n < 2) {
        throw ValidationError("distance matrix: needs at least 2 locations");
    }
    for (int i = 0; i < n; ++i) {
        if (values_(i, i) != 0.0) {
            throw ValidationError("distance matrix: nonzero diagonal at " + labels_[i]);
        }
        for (int j = 0; j < n; ++j) {
            const double v = values_(i, j);
            if (!std::isfinite(v)) {
                throw ValidationError("distance matrix: non-finite entry at (" + labels_[i] +
                                      "," + labels_[j] + ")");
            }
            if (v < 0.0) {
                throw ValidationError("distance matrix: negative entry at (" + labels_[i] + "," +
                                      labels_[j] + ")");
            }
            if (j > i) {
                const double w = values_(j, i);
                if (std::abs(v - w) > 1e-9 * std::max(1.0, v)) {
                    throw ValidationError("distance matrix: asymmetric at (" + labels_[i] + "," +
                                          labels_[j] + "): " + format_full(v) + " vs " +
                                          format_full(w));
                }
            }
        }
    }
}

std::string DistanceMatrix::to_csv() const {
    std::string out = "label";
    for (const auto& l : labels_) {
        out += ',';
        out += l;
    }
    out += '\n';
    for (int i = 0; i < n(); ++i) {
        out += labels_[static_cast<std::size_t>(i)];
        for (int j = 0; j < n(); ++j) {
            out += ',';
            out += format_full(values_(i, j));
        }
        out += '\n';
    }
    return out;
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    const int n = static_cast<int>(map_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : map_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("permutation: mapping is not a bijection on {0.." +
                                  std::to_string(n - 1) + "}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation Permutation::random(int n, std::uint64_t seed) {
    Rng rng(seed);
    return Permutation(random_indices(n, rng));
}

Permutation Permutation::sorting(const std::vector<std::string>& labels) {
    std::vector<int> m(labels.size());
    std::iota(m.begin(), m.end(), 0);
    std::sort(m.begin(), m.end(), [&](int a, int b) {
        return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
    });
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (int i = 0; i < n(); ++i) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i) {
        if (map_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("error while writing " + path);
}

Dataset parse_dataset_csv(const std::string& text, const std::string& origin,
                          const std::vector<std::string>& required_columns) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ValidationError(origin + ": empty file");

    const auto header = split_line(lines[0]);
    if (header.size() < 2) {
        throw ValidationError(origin + ": header needs a label column and at least one value column");
    }
    const std::size_t ncols = header.size();
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    for (std::size_t c = 1; c < ncols; ++c) columns.emplace_back(header[c], std::vector<double>{});
    for (const auto& req : required_columns) {
        if (std::none_of(columns.begin(), columns.end(),
                         [&](const auto& col) { return col.first == req; })) {
            throw ValidationError(origin + ": missing required column \"" + req + "\"");
        }
    }

    std::vector<std::string> labels;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto cells = split_line(lines[r]);
        if (cells.size() != ncols) {
            throw ValidationError(origin + ": row " + std::to_string(r) + " has " +
                                  std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(ncols));
        }
        labels.push_back(cells[0]);
        for (std::size_t c = 1; c < ncols; ++c) {
            columns[c - 1].second.push_back(parse_cell(cells[c], origin, cells[0], header[c]));
        }
    }
    if (labels.empty()) throw ValidationError(origin + ": empty file (no data rows)");
    if (labels.size() < 2) {
        throw ValidationError(origin + ": n < 3: sample too small for sample-mode statistics");
    }
    check_unique_labels(labels, origin);
    return Dataset(std::move(labels), std::move(columns));
}

Dataset load_dataset(const std::string& path, const std::vector<std::string>& required_columns) {
    return parse_dataset_csv(read_file(path), path, required_columns);
}

void save_dataset(const Dataset& dataset, const std::string& path) {
    write_file(path, dataset.to_csv());
}

DistanceMatrix parse_distance_csv(const std::string& text, const std::string& origin) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ValidationError(origin + ": empty file");

    const auto header = split_line(lines[0]);
    if (header.size() < 3) {
        throw ValidationError(origin + ": header needs a label column and at least 2 location columns");
    }
    const std::vector<std::string> labels(header.begin() + 1, header.end());
    const std::size_t n = labels.size();
    if (lines.size() - 1 != n) {
        throw ValidationError(origin + ": " + std::to_string(lines.size() - 1) + " rows for " +
                              std::to_string(n) + " header labels");
    }

    Eigen::MatrixXd values(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto cells = split_line(lines[r + 1]);
        if (cells.size() != n + 1) {
            throw ValidationError(origin + ": row " + std::to_string(r + 1) + " has " +
                                  std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(n + 1));
        }
        if (cells[0] != labels[r]) {
            throw ValidationError(origin + ": label mismatch between header and rows: \"" +
                                  labels[r] + "\" vs \"" + cells[0] + "\"");
        }
        for (std::size_t c = 0; c < n; ++c) {
            values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                parse_cell(cells[c + 1], origin, cells[0], labels[c]);
        }
    }
    try {
        return DistanceMatrix(labels, std::move(values));
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

DistanceMatrix load_distance_matrix(const std::string& path) {
    return parse_distance_csv(read_file(path), path);
}

std::pair<Dataset, DistanceMatrix> align(const Dataset& dataset, const DistanceMatrix& dm) {
    const auto& want = dataset.labels();
    const auto& have = dm.labels();
    const std::set<std::string> want_set(want.begin(), want.end());
    const std::set<std::string> have_set(have.begin(), have.end());
    if (want_set != have_set) {
        std::string only_data, only_dist;
        for (const auto& l : want) {
            if (!have_set.count(l)) only_data += (only_data.empty() ? "" : ", ") + l;
        }
        for (const auto& l : have) {
            if (!want_set.count(l)) only_dist += (only_dist.empty() ? "" : ", ") + l;
        }
        std::string msg = "label sets differ between dataset and distance matrix";
        if (!only_data.empty()) msg += "; only in dataset: " + only_data;
        if (!only_dist.empty()) msg += "; only in distance matrix: " + only_dist;
        throw ValidationError(msg);
    }

    std::vector<int> order(want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto it = std::find(have.begin(), have.end(), want[i]);
        order[i] = static_cast<int>(it - have.begin());
    }
    const Permutation p{std::move(order)};
    if (p.is_identity()) return {dataset, dm};
    return {dataset, apply_permutation(dm, p)};
}

Dataset apply_permutation(const Dataset& dataset, const Permutation& p) {
    if (p.n() != dataset.n()) {
        throw ValidationError("permutation size " + std::to_string(p.n()) +
                              " does not match dataset size " + std::to_string(dataset.n()));
    }
    const auto& m = p.map();
    std::vector<std::string> labels(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        labels[i] = dataset.labels()[static_cast<std::size_t>(m[i])];
    }
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    columns.reserve(dataset.columns().size());
    for (const auto& [name, values] : dataset.columns()) {
        std::vector<double> permuted(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            permuted[i] = values[static_cast<std::size_t>(m[i])];
        }
        columns.emplace_back(name, std::move(permuted));
    }
    return Dataset(std::move(labels), std::move(columns));
}

DistanceMatrix apply_permutation(const DistanceMatrix& dm, const Permutation& p) {
    if (p.n() != dm.n()) {
        throw ValidationError("permutation size " + std::to_string(p.n()) +
                              " does not match distance matrix size " + std::to_string(dm.n()));
    }
    const auto& m = p.map();
    const int n = dm.n();
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    Eigen::MatrixXd values(n, n);
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] =
            dm.labels()[static_cast<std::size_t>(m[static_cast<std::size_t>(i)])];
        for (int j = 0; j < n; ++j) {
            values(i, j) = dm.values()(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
        }
    }
    return DistanceMatrix(std::move(labels), std::move(values));
}

std::pair<Dataset, DistanceMatrix> apply_permutation(const Dataset& dataset,
                                                     const DistanceMatrix& dm,
                                                     const Permutation& p) {
    return {apply_permutation(dataset, p), apply_permutation(dm, p)};
}

}  // namespace sdw
