#include "fbnn/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fbnn::kern {

namespace {

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*sumsq)(const double*, std::size_t);
    double (*weighted_ssq)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    void (*hadamard)(const double*, double*, std::size_t);
    void (*gemv)(const double*, std::size_t, std::size_t, const double*, const double*, double*);
    void (*gemv_t)(const double*, std::size_t, std::size_t, const double*, double*);
    void (*ger)(double, const double*, std::size_t, const double*, std::size_t, double*);
    void (*relu)(double*, std::size_t);
    void (*relu_backward)(const double*, double*, std::size_t);
};

constexpr Vtable kScalar = {
    scalar::dot,  scalar::sum,    scalar::sumsq,  scalar::weighted_ssq,
    scalar::axpy, scalar::scale,  scalar::hadamard, scalar::gemv,
    scalar::gemv_t, scalar::ger,  scalar::relu,   scalar::relu_backward,
};

#ifdef FBNN_X86
constexpr Vtable kAvx2 = {
    avx2::dot,  avx2::sum,    avx2::sumsq,  avx2::weighted_ssq,
    avx2::axpy, avx2::scale,  avx2::hadamard, avx2::gemv,
    avx2::gemv_t, avx2::ger,  avx2::relu,   avx2::relu_backward,
};
#endif

Backend pick_default() {
#ifdef FBNN_X86
    if (const char* env = std::getenv("FBNN_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::Avx2;
    }
    if (avx2_supported()) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

Backend g_backend = pick_default();
const Vtable* g_vt =
#ifdef FBNN_X86
    g_backend == Backend::Avx2 ? &kAvx2 : &kScalar;
#else
    &kScalar;
#endif

}  // namespace

bool avx2_supported() {
#ifdef FBNN_X86
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend backend() { return g_backend; }

void set_backend(Backend b) {
#ifdef FBNN_X86
    if (b == Backend::Avx2 && avx2_supported()) {
        g_backend = Backend::Avx2;
        g_vt = &kAvx2;
        return;
    }
#endif
    g_backend = Backend::Scalar;
    g_vt = &kScalar;
}

double dot(const double* a, const double* b, std::size_t n) { return g_vt->dot(a, b, n); }
double sum(const double* x, std::size_t n) { return g_vt->sum(x, n); }
double sumsq(const double* x, std::size_t n) { return g_vt->sumsq(x, n); }
double weighted_ssq(const double* r, const double* w, std::size_t n) {
    return g_vt->weighted_ssq(r, w, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) { g_vt->axpy(a, x, y, n); }
void scale(double a, double* x, std::size_t n) { g_vt->scale(a, x, n); }
void hadamard(const double* a, double* b, std::size_t n) { g_vt->hadamard(a, b, n); }
void gemv(const double* w, std::size_t rows, std::size_t cols, const double* x,
          const double* bias, double* y) {
    g_vt->gemv(w, rows, cols, x, bias, y);
}
void gemv_t(const double* w, std::size_t rows, std::size_t cols, const double* x, double* y) {
    g_vt->gemv_t(w, rows, cols, x, y);
}
void ger(double a, const double* x, std::size_t m, const double* y, std::size_t n, double* A) {
    g_vt->ger(a, x, m, y, n, A);
}
void relu(double* x, std::size_t n) { g_vt->relu(x, n); }
void relu_backward(const double* pre, double* g, std::size_t n) { g_vt->relu_backward(pre, g, n); }

}  // namespace fbnn::kern
