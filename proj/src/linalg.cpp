#include "casimir/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace casimir::linalg {

namespace {

constexpr double kPivotFloor = 1e-300;
constexpr std::size_t kPanel = 64;

int resolve_threads(const ExecPolicy& pol) {
    if (!pol.parallel) return 1;
#ifdef _OPENMP
    return pol.threads > 0 ? pol.threads : omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

void reconstruct_dense(const BalancedMatrix& bm, double* out) {
    const std::size_t n = bm.dim;
    const auto& sig = bm.diagonal_logs;
    bool fast = true;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(sig[i]) > 1400.0) fast = false;
    if (fast) {
        std::vector<double> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = std::exp(0.5 * sig[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] = bm.entries[i * n + j] * (e[i] * e[j]);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double w = 0.5 * (sig[i] + sig[j]);
            out[i * n + j] = (w < -745.0) ? 0.0 : bm.entries[i * n + j] * std::exp(w);
        }
    }
}

LuResult lu_logdet(double* a, std::size_t n, const ExecPolicy& pol) {
    LuResult res;
    res.min_pivot = std::numeric_limits<double>::infinity();
    if (n == 0) return res;
    const int nt = resolve_threads(pol);
    (void)nt;

    for (std::size_t p = 0; p < n; p += kPanel) {
        const std::size_t pe = std::min(p + kPanel, n);

        // Panel factorization with partial pivoting (full-width row swaps).
        for (std::size_t k = p; k < pe; ++k) {
            std::size_t piv = k;
            double best = std::abs(a[k * n + k]);
            for (std::size_t i = k + 1; i < n; ++i) {
                double v = std::abs(a[i * n + k]);
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(a[piv * n + j], a[k * n + j]);
                res.sign = -res.sign;
            }
            const double ukk = a[k * n + k];
            const double aukk = std::abs(ukk);
            if (!(aukk >= kPivotFloor)) {
                res.min_pivot = std::min(res.min_pivot, std::abs(aukk));
                res.log_abs_det = -std::numeric_limits<double>::infinity();
                return res;
            }
            res.min_pivot = std::min(res.min_pivot, aukk);
            res.log_abs_det += std::log(aukk);
            if (ukk < 0) res.sign = -res.sign;
            const double inv = 1.0 / ukk;
            for (std::size_t i = k + 1; i < n; ++i) a[i * n + k] *= inv;
            for (std::size_t i = k + 1; i < n; ++i) {
                const double lik = a[i * n + k];
                if (lik == 0.0) continue;
                const double* uk = a + k * n;
                double* ai = a + i * n;
                for (std::size_t j = k + 1; j < pe; ++j) ai[j] -= lik * uk[j];
            }
        }
        if (pe == n) break;

        // U block row: forward-eliminate rows p..pe over columns pe..n.
        for (std::size_t k = p; k < pe; ++k) {
            const double* uk = a + k * n;
            for (std::size_t i = k + 1; i < pe; ++i) {
                const double lik = a[i * n + k];
                if (lik == 0.0) continue;
                double* ai = a + i * n;
                for (std::size_t j = pe; j < n; ++j) ai[j] -= lik * uk[j];
            }
        }

        // Schur complement update of the trailing block. Each row is updated
        // independently with a fixed k-order, so results do not depend on the
        // thread partition.
        const long lo = static_cast<long>(pe);
        const long hi = static_cast<long>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nt) if (nt > 1 && hi - lo > 32)
#endif
        for (long i = lo; i < hi; ++i) {
            double* ai = a + static_cast<std::size_t>(i) * n;
            for (std::size_t k = p; k < pe; ++k) {
                const double lik = ai[k];
                if (lik == 0.0) continue;
                const double* uk = a + k * n;
                for (std::size_t j = pe; j < n; ++j) ai[j] -= lik * uk[j];
            }
        }
    }
    return res;
}

LuResult lu_logdet_reference(double* a, std::size_t n) {
    LuResult res;
    res.min_pivot = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            res.sign = -res.sign;
        }
        const double ukk = a[k * n + k];
        const double aukk = std::abs(ukk);
        if (!(aukk >= kPivotFloor)) {
            res.min_pivot = std::min(res.min_pivot, std::abs(aukk));
            res.log_abs_det = -std::numeric_limits<double>::infinity();
            return res;
        }
        res.min_pivot = std::min(res.min_pivot, aukk);
        res.log_abs_det += std::log(aukk);
        if (ukk < 0) res.sign = -res.sign;
        const double inv = 1.0 / ukk;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double lik = a[i * n + k] * inv;
            a[i * n + k] = lik;
            if (lik == 0.0) continue;
            const double* rk = a + k * n;
            double* ri = a + i * n;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= lik * rk[j];
        }
    }
    return res;
}

namespace {

LogDetReport finish(const BalancedMatrix& bm, const LuResult& lu) {
    if (lu.sign != 1 || !(lu.min_pivot >= kPivotFloor) || !std::isfinite(lu.log_abs_det)) {
        throw non_contraction_error(
            "log_det_one_minus: I - M is not a positive contraction residue (dim " +
            std::to_string(bm.dim) + ", sign " + std::to_string(lu.sign) + ", min pivot " +
            std::to_string(lu.min_pivot) + ")");
    }
    LogDetReport rep;
    rep.value = lu.log_abs_det;
    rep.dimension = static_cast<long>(bm.dim);
    rep.min_pivot_magnitude = lu.min_pivot;
    rep.sign_product = lu.sign;
    return rep;
}

}  // namespace

LogDetReport log_det_one_minus(const BalancedMatrix& bm, const ExecPolicy& pol) {
    const std::size_t n = bm.dim;
    std::vector<double> a(n * n);
    reconstruct_dense(bm, a.data());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = (i == j ? 1.0 : 0.0) - a[i * n + j];
    return finish(bm, lu_logdet(a.data(), n, pol));
}

LogDetReport log_det_one_minus_reference(const BalancedMatrix& bm) {
    const std::size_t n = bm.dim;
    std::vector<double> a(n * n);
    reconstruct_dense(bm, a.data());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = (i == j ? 1.0 : 0.0) - a[i * n + j];
    return finish(bm, lu_logdet_reference(a.data(), n));
}

double spectral_radius_estimate(const BalancedMatrix& bm, int iters) {
    if (iters < 1) throw std::domain_error("spectral_radius_estimate: iters >= 1");
    const std::size_t n = bm.dim;
    if (n == 0) return 0.0;
    std::vector<double> mat(n * n);
    reconstruct_dense(bm, mat.data());

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(n);
    double rayleigh = 0.0;
    for (int it = 0; it < iters; ++it) {
        double dot = 0.0, norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            const double* row = mat.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
            w[i] = s;
            dot += v[i] * s;
            norm2 += s * s;
        }
        if (norm2 == 0.0) return 0.0;
        rayleigh = std::abs(dot);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] * inv;
    }
    return rayleigh;
}

}  // namespace casimir::linalg
