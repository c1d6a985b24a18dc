#pragma once

#include <cstdint>
#include <cstring>

// Per-output-row inner kernels shared by the serial and OpenMP builds.
// Keeping the floating-point evaluation order identical in both paths is what
// makes the parallel results bitwise-equal to the reference.

namespace beno::kernels::rows {

inline void nn_row(const double* a, const double* B, double* c,
                   int64_t k, int64_t m, bool accumulate) {
    if (!accumulate) std::memset(c, 0, sizeof(double) * static_cast<size_t>(m));
    for (int64_t p = 0; p < k; ++p) {
        const double av = a[p];
        const double* brow = B + p * m;
        for (int64_t j = 0; j < m; ++j) c[j] += av * brow[j];
    }
}

inline void nt_row(const double* a, const double* B, double* c,
                   int64_t k, int64_t m, bool accumulate) {
    for (int64_t j = 0; j < m; ++j) {
        const double* brow = B + j * k;
        double acc = 0.0;
        for (int64_t p = 0; p < k; ++p) acc += a[p] * brow[p];
        c[j] = accumulate ? c[j] + acc : acc;
    }
}

// Output row `a` of C[k,m] = A[n,k]^T * B[n,m].
inline void tn_row(const double* A, const double* B, double* c,
                   int64_t a, int64_t n, int64_t k, int64_t m, bool accumulate) {
    if (!accumulate) std::memset(c, 0, sizeof(double) * static_cast<size_t>(m));
    for (int64_t r = 0; r < n; ++r) {
        const double av = A[r * k + a];
        const double* brow = B + r * m;
        for (int64_t j = 0; j < m; ++j) c[j] += av * brow[j];
    }
}

}  // namespace beno::kernels::rows
