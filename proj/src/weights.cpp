#include "sdw/weights.hpp"

#include <cmath>
#include <cstdio>

namespace sdw {

WeightSpec WeightSpec::parse(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);

    const auto parse_number = [&](const std::string& what) {
        try {
            std::size_t used = 0;
            const double v = std::stod(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return v;
        } catch (const std::exception&) {
            throw ValidationError("weight spec \"" + text + "\": cannot parse " + what + " \"" +
                                  arg + "\"");
        }
    };

    WeightSpec spec;
    if (name == "power") {
        spec.kernel = Kernel::inverse_power;
        spec.gamma = arg.empty() ? 1.0 : parse_number("gamma");
        if (!(spec.gamma > 0.0)) {
            throw ValidationError("weight spec \"" + text + "\": gamma must be positive");
        }
    } else if (name == "exp") {
        spec.kernel = Kernel::negative_exponential;
        if (!arg.empty()) {
            throw ValidationError("weight spec \"" + text + "\": exp takes no parameter");
        }
    } else if (name == "step") {
        spec.kernel = Kernel::step;
        if (arg.empty()) {
            throw ValidationError("weight spec \"" + text + "\": step needs a threshold, e.g. step:250");
        }
        spec.d0 = parse_number("d0");
        if (!(spec.d0 > 0.0)) {
            throw ValidationError("weight spec \"" + text + "\": d0 must be positive");
        }
    } else {
        throw ValidationError("unknown weight kernel \"" + name +
                              "\" (expected power[:gamma], exp, or step:d0)");
    }
    return spec;
}

std::string WeightSpec::to_string() const {
    char buf[64];
    switch (kernel) {
        case Kernel::inverse_power:
            std::snprintf(buf, sizeof buf, "power:%.12g", gamma);
            return buf;
        case Kernel::negative_exponential:
            return "exp";
        case Kernel::step:
            std::snprintf(buf, sizeof buf, "step:%.12g", d0);
            return buf;
    }
    return "";
}

double mean_offdiagonal_distance(const DistanceMatrix& dm) {
    const int n = dm.n();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) sum += dm.values()(i, j);
        }
    }
    return sum / (static_cast<double>(n) * (n - 1));
}

ContiguityMatrix contiguity_from_distances(const DistanceMatrix& dm, const WeightSpec& spec) {
    const int n = dm.n();
    const Eigen::MatrixXd& r = dm.values();

    if (spec.kernel != Kernel::step) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (r(i, j) <= 0.0) {
                    throw ValidationError(
                        "contiguity: zero distance between " + dm.labels()[static_cast<std::size_t>(i)] +
                        " and " + dm.labels()[static_cast<std::size_t>(j)] +
                        " is not representable under the " + spec.to_string() + " kernel");
                }
            }
        }
    }

    ContiguityMatrix v;
    v.values = Eigen::MatrixXd::Zero(n, n);
    const double rbar =
        spec.kernel == Kernel::negative_exponential ? mean_offdiagonal_distance(dm) : 0.0;

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double value = 0.0;
            switch (spec.kernel) {
                case Kernel::inverse_power:
                    value = std::pow(r(i, j), -spec.gamma);
                    break;
                case Kernel::negative_exponential:
                    value = std::exp(-2.0 * r(i, j) / rbar);
                    break;
                case Kernel::step:
                    value = r(i, j) <= spec.d0 ? 1.0 : 0.0;
                    break;
            }
            v.values(i, j) = value;
        }
    }
    v.total = v.values.sum();
    if (!(v.total > 0.0)) {
        throw ValidationError("contiguity: all entries are zero under " + spec.to_string() +
                              " (no pair within reach)");
    }
    return v;
}

WeightMatrix normalize(const ContiguityMatrix& v) {
    if (!(v.total > 0.0)) throw ValidationError("normalize: contiguity total must be positive");
    WeightMatrix w;
    w.values = v.values / v.total;
    w.row_sums = w.values.rowwise().sum();
    return w;
}

WeightMatrix even_weights(int n) {
    if (n < 2) throw ValidationError("even weights: need n >= 2");
    WeightMatrix w;
    const double off = 1.0 / (static_cast<double>(n) * (n - 1));
    w.values = Eigen::MatrixXd::Constant(n, n, off);
    w.values.diagonal().setZero();
    w.row_sums = w.values.rowwise().sum();
    return w;
}

}  // namespace sdw
