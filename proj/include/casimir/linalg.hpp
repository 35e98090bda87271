#ifndef CASIMIR_LINALG_HPP
#define CASIMIR_LINALG_HPP

#include <cstddef>

#include "casimir/scattering.hpp"

namespace casimir::linalg {

// Execution policy for the kernels. Results are bit-identical for any
// thread count; `parallel = false` merely keeps the loops serial.
struct ExecPolicy {
    bool parallel = true;
    int threads = 0;  // 0 = OpenMP default
};

struct LogDetReport {
    double value = 0;                  // ln det(I - M)
    long dimension = 0;
    double min_pivot_magnitude = 0;
    int sign_product = 1;
};

// ln det(I - M) by dense LU with partial pivoting on I - M (blocked kernel,
// OpenMP trailing update). Throws non_contraction_error when the pivot sign
// product is not +1 or a pivot magnitude falls below 1e-300.
LogDetReport log_det_one_minus(const BalancedMatrix& bm, const ExecPolicy& pol = {});

// Plain right-looking serial LU, kept as the reference implementation for
// tests and benchmarks.
LogDetReport log_det_one_minus_reference(const BalancedMatrix& bm);

// Power-iteration lower-bound estimate of the spectral radius (diagnostic).
double spectral_radius_estimate(const BalancedMatrix& bm, int iters);

// In-place LU factorization of a dense row-major n x n matrix; returns the
// log-determinant pieces. Exposed for tests and the benchmark tool.
struct LuResult {
    double log_abs_det = 0;
    int sign = 1;
    double min_pivot = 0;
};
LuResult lu_logdet(double* a, std::size_t n, const ExecPolicy& pol);
LuResult lu_logdet_reference(double* a, std::size_t n);

// Dense reconstruction M_ij = entries_ij * exp((sigma_i + sigma_j)/2),
// written into `out` (row-major, dim^2). Underflow maps to exact zero.
void reconstruct_dense(const BalancedMatrix& bm, double* out);

}  // namespace casimir::linalg

#endif
