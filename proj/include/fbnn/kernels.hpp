#pragma once

#include <cstddef>

// Dense arithmetic kernels behind every inner loop in the project: network
// forward/backward passes, leapfrog integration, residual norms, ESS
// autocorrelations. Each kernel has a scalar reference implementation and an
// AVX2+FMA variant; the active backend is chosen once at startup from CPUID
// (override with FBNN_SIMD=scalar|avx2 or set_backend). The two backends are
// equivalence-tested against each other in tests/test_kernels.cpp.

namespace fbnn::kern {

enum class Backend { Scalar, Avx2 };

Backend backend();
void set_backend(Backend b);
bool avx2_supported();

double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
/// sum_i r[i]^2 * w[i]
double weighted_ssq(const double* r, const double* w, std::size_t n);
/// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
/// b[i] *= a[i]
void hadamard(const double* a, double* b, std::size_t n);
/// y = W x (+ bias), W row-major rows x cols
void gemv(const double* w, std::size_t rows, std::size_t cols, const double* x,
          const double* bias, double* y);
/// y = W^T x, y has length cols (overwritten)
void gemv_t(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y);
/// A += a * x y^T, A row-major m x n
void ger(double a, const double* x, std::size_t m, const double* y, std::size_t n, double* A);
void relu(double* x, std::size_t n);
/// g[i] = pre[i] > 0 ? g[i] : 0
void relu_backward(const double* pre, double* g, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double weighted_ssq(const double* r, const double* w, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void hadamard(const double* a, double* b, std::size_t n);
void gemv(const double* w, std::size_t rows, std::size_t cols, const double* x,
          const double* bias, double* y);
void gemv_t(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y);
void ger(double a, const double* x, std::size_t m, const double* y, std::size_t n, double* A);
void relu(double* x, std::size_t n);
void relu_backward(const double* pre, double* g, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define FBNN_X86 1
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double weighted_ssq(const double* r, const double* w, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
void hadamard(const double* a, double* b, std::size_t n);
void gemv(const double* w, std::size_t rows, std::size_t cols, const double* x,
          const double* bias, double* y);
void gemv_t(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y);
void ger(double a, const double* x, std::size_t m, const double* y, std::size_t n, double* A);
void relu(double* x, std::size_t n);
void relu_backward(const double* pre, double* g, std::size_t n);
}  // namespace avx2
#endif

}  // namespace fbnn::kern
