#include "beno/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace beno::kernels {

namespace {
std::atomic<Mode> g_mode{
#ifdef _OPENMP
    Mode::OpenMP
#else
    Mode::Serial
#endif
};
}

Mode mode() { return g_mode.load(); }
void set_mode(Mode m) { g_mode.store(m); }

int thread_count() {
#ifdef _OPENMP
    return g_mode.load() == Mode::Serial ? 1 : omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
    if (n <= 1) {
        set_mode(Mode::Serial);
#ifdef _OPENMP
        omp_set_num_threads(1);
#endif
        return;
    }
#ifdef _OPENMP
    omp_set_num_threads(n);
    set_mode(Mode::OpenMP);
#endif
}

void matmul_nn(const double* A, const double* B, double* C,
               int64_t n, int64_t k, int64_t m, bool accumulate) {
    if (mode() == Mode::Serial)
        detail::matmul_nn_serial(A, B, C, n, k, m, accumulate);
    else
        detail::matmul_nn_omp(A, B, C, n, k, m, accumulate);
}

void matmul_nt(const double* A, const double* B, double* C,
               int64_t n, int64_t k, int64_t m, bool accumulate) {
    if (mode() == Mode::Serial)
        detail::matmul_nt_serial(A, B, C, n, k, m, accumulate);
    else
        detail::matmul_nt_omp(A, B, C, n, k, m, accumulate);
}

void matmul_tn(const double* A, const double* B, double* C,
               int64_t n, int64_t k, int64_t m, bool accumulate) {
    if (mode() == Mode::Serial)
        detail::matmul_tn_serial(A, B, C, n, k, m, accumulate);
    else
        detail::matmul_tn_omp(A, B, C, n, k, m, accumulate);
}

void add_bias_rows(double* Y, const double* b, int64_t n, int64_t m) {
    for (int64_t i = 0; i < n; ++i) {
        double* row = Y + i * m;
        for (int64_t j = 0; j < m; ++j) row[j] += b[j];
    }
}

void colsum(const double* Y, double* out, int64_t n, int64_t m, bool accumulate) {
    if (!accumulate)
        for (int64_t j = 0; j < m; ++j) out[j] = 0.0;
    for (int64_t i = 0; i < n; ++i) {
        const double* row = Y + i * m;
        for (int64_t j = 0; j < m; ++j) out[j] += row[j];
    }
}

}  // namespace beno::kernels
