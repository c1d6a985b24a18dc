#include "beno/kernels.hpp"

#include "kernels_rows.hpp"

// Row-partitioned loops: every output row is produced by exactly one thread
// with the same instruction sequence as the serial build, so there are no
// cross-thread reductions and no scheduling-dependent rounding.

namespace beno::kernels::detail {

namespace {
constexpr int64_t kParallelCutoff = 8192;  // skip thread startup on tiny ops
}

void matmul_nn_omp(const double* A, const double* B, double* C,
                   int64_t n, int64_t k, int64_t m, bool accumulate) {
#pragma omp parallel for schedule(static) if (n * k * m > kParallelCutoff)
    for (int64_t i = 0; i < n; ++i)
        rows::nn_row(A + i * k, B, C + i * m, k, m, accumulate);
}

void matmul_nt_omp(const double* A, const double* B, double* C,
                   int64_t n, int64_t k, int64_t m, bool accumulate) {
#pragma omp parallel for schedule(static) if (n * k * m > kParallelCutoff)
    for (int64_t i = 0; i < n; ++i)
        rows::nt_row(A + i * k, B, C + i * m, k, m, accumulate);
}

void matmul_tn_omp(const double* A, const double* B, double* C,
                   int64_t n, int64_t k, int64_t m, bool accumulate) {
#pragma omp parallel for schedule(static) if (n * k * m > kParallelCutoff)
    for (int64_t a = 0; a < k; ++a)
        rows::tn_row(A, B, C + a * m, a, n, k, m, accumulate);
}

}  // namespace beno::kernels::detail
