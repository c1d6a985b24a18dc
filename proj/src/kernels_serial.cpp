#include "beno/kernels.hpp"

#include "kernels_rows.hpp"

namespace beno::kernels::detail {

void matmul_nn_serial(const double* A, const double* B, double* C,
                      int64_t n, int64_t k, int64_t m, bool accumulate) {
    for (int64_t i = 0; i < n; ++i)
        rows::nn_row(A + i * k, B, C + i * m, k, m, accumulate);
}

void matmul_nt_serial(const double* A, const double* B, double* C,
                      int64_t n, int64_t k, int64_t m, bool accumulate) {
    for (int64_t i = 0; i < n; ++i)
        rows::nt_row(A + i * k, B, C + i * m, k, m, accumulate);
}

void matmul_tn_serial(const double* A, const double* B, double* C,
                      int64_t n, int64_t k, int64_t m, bool accumulate) {
    for (int64_t a = 0; a < k; ++a)
        rows::tn_row(A, B, C + a * m, a, n, k, m, accumulate);
}

}  // namespace beno::kernels::detail
