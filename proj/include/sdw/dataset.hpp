#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "sdw/error.hpp"
#include "sdw/rng.hpp"

namespace sdw {

// Ordered, labeled observations. Row order is preserved exactly as read:
// the Durbin-Watson statistic depends on it.
class Dataset {
  public:
    Dataset() = default;
    Dataset(std::vector<std::string> labels,
            std::vector<std::pair<std::string, std::vector<double>>> columns);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<std::string> column_names() const;
    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;
    const std::vector<std::pair<std::string, std::vector<double>>>& columns() const {
        return columns_;
    }

    // Canonical CSV form: header `label,<col...>`, '.' decimal point, %.17g
    // values so a write/read round trip is exact.
    std::string to_csv() const;

    bool operator==(const Dataset& other) const = default;

  private:
    std::vector<std::string> labels_;
    std::vector<std::pair<std::string, std::vector<double>>> columns_;
};

// Symmetric nonnegative pairwise distances with a zero diagonal.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    DistanceMatrix(std::vector<std::string> labels, Eigen::MatrixXd values);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Eigen::MatrixXd& values() const { return values_; }

    std::string to_csv() const;

  private:
    std::vector<std::string> labels_;
    Eigen::MatrixXd values_;
};

// Bijection on {0..n-1}. map()[i] is the source index of the element placed
// at position i.
class Permutation {
  public:
    explicit Permutation(std::vector<int> mapping);

    static Permutation identity(int n);
    static Permutation random(int n, std::uint64_t seed);
    // Order that sorts the given labels lexicographically.
    static Permutation sorting(const std::vector<std::string>& labels);

    int n() const { return static_cast<int>(map_.size()); }
    const std::vector<int>& map() const { return map_; }
    Permutation inverse() const;
    bool is_identity() const;

  private:
    std::vector<int> map_;
};

Dataset load_dataset(const std::string& path, const std::vector<std::string>& required_columns);
Dataset parse_dataset_csv(const std::string& text, const std::string& origin,
                          const std::vector<std::string>& required_columns);
void save_dataset(const Dataset& dataset, const std::string& path);

DistanceMatrix load_distance_matrix(const std::string& path);
DistanceMatrix parse_distance_csv(const std::string& text, const std::string& origin);

// Reorders the matrix rows/columns to the dataset's label order.
// The dataset itself is never touched.
std::pair<Dataset, DistanceMatrix> align(const Dataset& dataset, const DistanceMatrix& dm);

Dataset apply_permutation(const Dataset& dataset, const Permutation& p);
DistanceMatrix apply_permutation(const DistanceMatrix& dm, const Permutation& p);
std::pair<Dataset, DistanceMatrix> apply_permutation(const Dataset& dataset,
                                                     const DistanceMatrix& dm,
                                                     const Permutation& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sdw
