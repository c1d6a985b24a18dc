#pragma once

#include <cstdint>

namespace beno::kernels {

// Dense kernels come in two builds: a serial reference and an OpenMP version.
// Both call the same per-row inner routine, so results are bitwise identical
// for any thread count; tests assert this.
enum class Mode { Serial, OpenMP };

Mode mode();
void set_mode(Mode m);
int thread_count();
void set_threads(int n);  // n == 1 also selects Mode::Serial

// C[n,m] = A[n,k] * B[k,m]        (+= when accumulate)
void matmul_nn(const double* A, const double* B, double* C,
               int64_t n, int64_t k, int64_t m, bool accumulate = false);
// C[n,m] = A[n,k] * B[m,k]^T
void matmul_nt(const double* A, const double* B, double* C,
               int64_t n, int64_t k, int64_t m, bool accumulate = false);
// C[k,m] = A[n,k]^T * B[n,m]
void matmul_tn(const double* A, const double* B, double* C,
               int64_t n, int64_t k, int64_t m, bool accumulate = false);

void add_bias_rows(double* Y, const double* b, int64_t n, int64_t m);
// out[m] = column sums of Y[n,m]
void colsum(const double* Y, double* out, int64_t n, int64_t m, bool accumulate = false);

namespace detail {
void matmul_nn_serial(const double*, const double*, double*, int64_t, int64_t, int64_t, bool);
void matmul_nt_serial(const double*, const double*, double*, int64_t, int64_t, int64_t, bool);
void matmul_tn_serial(const double*, const double*, double*, int64_t, int64_t, int64_t, bool);
void matmul_nn_omp(const double*, const double*, double*, int64_t, int64_t, int64_t, bool);
void matmul_nt_omp(const double*, const double*, double*, int64_t, int64_t, int64_t, bool);
void matmul_tn_omp(const double*, const double*, double*, int64_t, int64_t, int64_t, bool);
}  // namespace detail

}  // namespace beno::kernels
