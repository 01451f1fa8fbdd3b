#pragma once

// Scalar reference kernels, templated so the double-precision gradient-check
// path runs through the same arithmetic as the float path.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "arfoley/simd/kernels.hpp"

namespace arfoley::simd::ref {

template <typename T>
void gemm(Trans ta, Trans tb, std::size_t m, std::size_t n, std::size_t k, T alpha, const T* a,
          std::size_t lda, const T* b, std::size_t ldb, T beta, T* c, std::size_t ldc) {
    for (std::size_t i = 0; i < m; ++i) {
        T* crow = c + i * ldc;
        if (beta == T(0)) {
            std::fill(crow, crow + n, T(0));
        } else if (beta != T(1)) {
            for (std::size_t j = 0; j < n; ++j) crow[j] *= beta;
        }
    }
    const bool at = ta == Trans::yes;
    const bool bt = tb == Trans::yes;
    for (std::size_t i = 0; i < m; ++i) {
        T* crow = c + i * ldc;
        for (std::size_t j = 0; j < n; ++j) {
            T acc = 0;
            for (std::size_t p = 0; p < k; ++p) {
                const T av = at ? a[p * lda + i] : a[i * lda + p];
                const T bv = bt ? b[j * ldb + p] : b[p * ldb + j];
                acc += av * bv;
            }
            crow[j] += alpha * acc;
        }
    }
}

template <typename T>
T dot(const T* x, const T* y, std::size_t n) {
    T acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

template <typename T>
T l2sq(const T* x, const T* y, std::size_t n) {
    T acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const T d = x[i] - y[i];
        acc += d * d;
    }
    return acc;
}

template <typename T>
void axpy(T a, const T* x, T* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
void softmax(T* x, std::size_t n) {
    if (n == 0) return;
    T mx = -std::numeric_limits<T>::infinity();
    for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, x[i]);
    T sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::exp(x[i] - mx);
        sum += x[i];
    }
    const T inv = T(1) / sum;
    for (std::size_t i = 0; i < n; ++i) x[i] *= inv;
}

inline constexpr double gelu_c = 0.7978845608028654;  // sqrt(2/pi)
inline constexpr double gelu_a = 0.044715;

template <typename T>
void gelu(const T* x, T* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const T v = x[i];
        const T u = T(gelu_c) * (v + T(gelu_a) * v * v * v);
        y[i] = T(0.5) * v * (T(1) + std::tanh(u));
    }
}

template <typename T>
void gelu_backward(const T* x, const T* dy, T* dx, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const T v = x[i];
        const T u = T(gelu_c) * (v + T(gelu_a) * v * v * v);
        const T t = std::tanh(u);
        const T du = T(gelu_c) * (T(1) + T(3 * gelu_a) * v * v);
        dx[i] += dy[i] * (T(0.5) * (T(1) + t) + T(0.5) * v * (T(1) - t * t) * du);
    }
}

}  // namespace arfoley::simd::ref
