#pragma once

#include <Eigen/Dense>
#include <string>

#include "sdw/dataset.hpp"

namespace sdw {

enum class Kernel { inverse_power, negative_exponential, step };

// How distances turn into contiguity values:
//   inverse-power        v_ij = r_ij^-gamma
//   negative-exponential v_ij = exp(-2 r_ij / rbar), rbar the mean off-diagonal distance
//   step                 v_ij = 1 if r_ij <= d0 else 0
struct WeightSpec {
    Kernel kernel = Kernel::inverse_power;
    double gamma = 1.0;  // inverse-power exponent
    double d0 = 0.0;     // step threshold, in the distance unit of the input

    // CLI encoding: "power", "power:<gamma>", "exp", "step:<d0>".
    static WeightSpec parse(const std::string& text);
    std::string to_string() const;
};

// Spatial contiguity matrix V: symmetric, zero diagonal, nonnegative,
// with total = sum of all entries.
struct ContiguityMatrix {
    Eigen::MatrixXd values;
    double total = 0.0;

    int n() const { return static_cast<int>(values.rows()); }
};

// Unit-sum spatial weight matrix W = V / total.
struct WeightMatrix {
    Eigen::MatrixXd values;
    Eigen::VectorXd row_sums;

    int n() const { return static_cast<int>(values.rows()); }
};

ContiguityMatrix contiguity_from_distances(const DistanceMatrix& dm, const WeightSpec& spec);
WeightMatrix normalize(const ContiguityMatrix& v);

// Homogeneous weights: 1/(n(n-1)) off the diagonal. Gives the closed forms
// I_p = -1/(n-1), I_s = -1/n, C = 1 for any zero-mean residuals.
WeightMatrix even_weights(int n);

// Mean of all n(n-1) off-diagonal distances (both triangles).
double mean_offdiagonal_distance(const DistanceMatrix& dm);

}  // namespace sdw
