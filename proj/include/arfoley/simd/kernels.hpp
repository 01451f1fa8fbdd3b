#pragma once

// Runtime-dispatched float kernels for the hot inner loops.
//
// Every entry has a portable scalar reference (kernels_ref.hpp) and, where the
// CPU supports it, an AVX2/FMA variant. The active table is chosen once on
// first use; ARFOLEY_KERNELS=scalar|avx2 overrides the choice.

#include <cstddef>
#include <string_view>

namespace arfoley::simd {

enum class Trans : bool { no = false, yes = true };

struct KernelTable {
    const char* name;

    // C = alpha * op(A) * op(B) + beta * C, row-major with leading dimensions.
    // beta == 0 overwrites C without reading it.
    void (*sgemm)(Trans ta, Trans tb, std::size_t m, std::size_t n, std::size_t k, float alpha,
                  const float* a, std::size_t lda, const float* b, std::size_t ldb, float beta,
                  float* c, std::size_t ldc);

    float (*dot)(const float* x, const float* y, std::size_t n);
    // sum_i (x_i - y_i)^2
    float (*l2sq)(const float* x, const float* y, std::size_t n);
    // y += a * x
    void (*axpy)(float a, const float* x, float* y, std::size_t n);
    // In-place numerically stable softmax over n entries.
    void (*softmax)(float* x, std::size_t n);
    // tanh-approximation GELU
    void (*gelu)(const float* x, float* y, std::size_t n);
    // dx += gelu'(x) * dy
    void (*gelu_backward)(const float* x, const float* dy, float* dx, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_kernels();

// The table used by the library.
const KernelTable& kernels();

// Force a specific table ("scalar" or "avx2"); returns false if unavailable.
bool select_kernels(std::string_view name);

}  // namespace arfoley::simd
