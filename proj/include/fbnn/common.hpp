#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbnn {

using Vec = std::vector<double>;

/// Input violates a precondition (dimension mismatch, empty batch, bad config).
class RejectedInput : public std::invalid_argument {
public:
    explicit RejectedInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation produced a non-finite value. `index` locates the first
/// offending entry in whatever array the thrower was scanning.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::size_t index)
        : std::runtime_error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Dense row-major matrix of doubles.
struct Matrix {
    std::vector<double> data;
    std::size_t rows = 0, cols = 0;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : data(r * c, 0.0), rows(r), cols(c) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    bool empty() const { return rows == 0 || cols == 0; }
};

inline bool all_finite(const double* x, std::size_t n, std::size_t* bad = nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x[i])) {
            if (bad) *bad = i;
            return false;
        }
    }
    return true;
}

inline double mean_of(const Vec& x) {
    if (x.empty()) return 0.0;
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

inline double variance_of(const Vec& x) {
    if (x.size() < 2) return 0.0;
    double m = mean_of(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

/// Linear-interpolation quantile (the "type 7" rule): h = (n-1)q, interpolate
/// between the two closest order statistics. `sorted` must be ascending.
inline double quantile_sorted(const Vec& sorted, double q) {
    if (sorted.empty()) throw RejectedInput("quantile of empty sample");
    if (sorted.size() == 1) return sorted[0];
    double h = static_cast<double>(sorted.size() - 1) * q;
    auto lo = static_cast<std::size_t>(std::floor(h));
    auto hi = std::min(lo + 1, sorted.size() - 1);
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline double quantile(Vec values, double q) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, q);
}

}  // namespace fbnn
