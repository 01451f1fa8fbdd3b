#pragma once

// Precision-generic front end: float goes through the runtime-selected table,
// double through the scalar references.

#include "arfoley/simd/kernels.hpp"
#include "arfoley/simd/kernels_ref.hpp"

namespace arfoley::simd {

template <typename T>
struct Kern;

template <>
struct Kern<float> {
    static void gemm(Trans ta, Trans tb, std::size_t m, std::size_t n, std::size_t k, float alpha,
                     const float* a, std::size_t lda, const float* b, std::size_t ldb, float beta,
                     float* c, std::size_t ldc) {
        kernels().sgemm(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
    }
    static float dot(const float* x, const float* y, std::size_t n) { return kernels().dot(x, y, n); }
    static float l2sq(const float* x, const float* y, std::size_t n) { return kernels().l2sq(x, y, n); }
    static void axpy(float a, const float* x, float* y, std::size_t n) { kernels().axpy(a, x, y, n); }
    static void softmax(float* x, std::size_t n) { kernels().softmax(x, n); }
    static void gelu(const float* x, float* y, std::size_t n) { kernels().gelu(x, y, n); }
    static void gelu_backward(const float* x, const float* dy, float* dx, std::size_t n) {
        kernels().gelu_backward(x, dy, dx, n);
    }
};

template <>
struct Kern<double> {
    static void gemm(Trans ta, Trans tb, std::size_t m, std::size_t n, std::size_t k, double alpha,
                     const double* a, std::size_t lda, const double* b, std::size_t ldb, double beta,
                     double* c, std::size_t ldc) {
        ref::gemm<double>(ta, tb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
    }
    static double dot(const double* x, const double* y, std::size_t n) { return ref::dot(x, y, n); }
    static double l2sq(const double* x, const double* y, std::size_t n) { return ref::l2sq(x, y, n); }
    static void axpy(double a, const double* x, double* y, std::size_t n) { ref::axpy(a, x, y, n); }
    static void softmax(double* x, std::size_t n) { ref::softmax(x, n); }
    static void gelu(const double* x, double* y, std::size_t n) { ref::gelu(x, y, n); }
    static void gelu_backward(const double* x, const double* dy, double* dx, std::size_t n) {
        ref::gelu_backward(x, dy, dx, n);
    }
};

}  // namespace arfoley::simd
