#include "fbnn/kernels.hpp"

namespace fbnn::kern::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double sumsq(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

double weighted_ssq(const double* r, const double* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += r[i] * r[i] * w[i];
    return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void hadamard(const double* a, double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) b[i] *= a[i];
}

void gemv(const double* w, std::size_t rows, std::size_t cols, const double* x,
          const double* bias, double* y) {
    for (std::size_t i = 0; i < rows; ++i) {
        double s = bias ? bias[i] : 0.0;
        const double* row = w + i * cols;
        for (std::size_t j = 0; j < cols; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

void gemv_t(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t j = 0; j < cols; ++j) y[j] = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = w + i * cols;
        double xi = x[i];
        for (std::size_t j = 0; j < cols; ++j) y[j] += xi * row[j];
    }
}

void ger(double a, const double* x, std::size_t m, const double* y, std::size_t n, double* A) {
    for (std::size_t i = 0; i < m; ++i) {
        double axi = a * x[i];
        double* row = A + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] += axi * y[j];
    }
}

void relu(double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward(const double* pre, double* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (pre[i] <= 0.0) g[i] = 0.0;
    }
}

}  // namespace fbnn::kern::scalar
