#include "casimir/scattering.hpp"

#include <cmath>

#include "casimir/specfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace casimir {

namespace {

int parity_sign(long p) { return (p % 2 == 0) ? 1 : -1; }

void check_ell(long ell) {
    if (ell < 1) throw std::domain_error("Mie coefficient: require ell >= 1");
}

// ln S_l^(m) with S_l = sqrt( l (2l+1)!! (2l-1)!! / ((l+1)(l-m)!(l+m)!) ).
double log_kernel_norm(long ell, int m) {
    using specfun::log_double_factorial;
    using specfun::log_factorial;
    return 0.5 * (std::log(static_cast<double>(ell)) - std::log(static_cast<double>(ell + 1)) +
                  log_double_factorial(2 * ell + 1) + log_double_factorial(2 * ell - 1) -
                  log_factorial(ell - m) - log_factorial(ell + m));
}

}  // namespace

LogValue electric_coefficient(long ell, MirrorModel) {
    check_ell(ell);
    using specfun::log_double_factorial;
    double lm = std::log(static_cast<double>(ell + 1)) - std::log(static_cast<double>(ell)) -
                log_double_factorial(2 * ell + 1) - log_double_factorial(2 * ell - 1);
    return LogValue::from_log(parity_sign(ell), lm);
}

LogValue magnetic_coefficient(long ell, MirrorModel model) {
    check_ell(ell);
    if (model == MirrorModel::Drude) return LogValue::zero();
    LogValue e = electric_coefficient(ell, model);
    double ratio = std::log(static_cast<double>(ell)) - std::log(static_cast<double>(ell + 1));
    return LogValue::from_log(-e.sign, e.log_magnitude + ratio);
}

LogValue translation_kernel(long ell, long ell_prime, int m, Channel channel, double z) {
    if (m < 0) throw std::domain_error("translation_kernel: require m >= 0");
    long lo = std::max<long>(1, m);
    if (ell < lo || ell_prime < lo)
        throw std::domain_error("translation_kernel: indices below max(1, m)");
    if (!(z > 0.0 && z < 1.0))
        throw std::domain_error("translation_kernel: require 0 < z < 1");
    (void)channel;  // r_TM = +1 / r_TE = -1 combine with the image parity to
                    // the same (-1)^(l+l') in both channels
    double lm = log_kernel_norm(ell, m) + log_kernel_norm(ell_prime, m) +
                specfun::log_factorial(ell + ell_prime) +
                static_cast<double>(ell + ell_prime + 1) * std::log(0.5 * z);
    return LogValue::from_log(parity_sign(ell + ell_prime), lm);
}

ChannelMatrix build_channel_matrix(const Geometry& g, MirrorModel model, Channel channel,
                                   int m, long ell_max) {
    if (m < 0) throw std::domain_error("build_channel_matrix: require m >= 0");
    if (channel == Channel::Magnetic && model == MirrorModel::Drude)
        throw std::domain_error("build_channel_matrix: Drude admits no magnetic channel");
    long ell_min = std::max<long>(1, m);
    if (ell_max < ell_min)
        throw std::domain_error("build_channel_matrix: ell_max below max(1, m)");

    ChannelMatrix cm;
    cm.m = m;
    cm.channel = channel;
    cm.model = model;
    cm.ell_min = ell_min;
    cm.ell_max = ell_max;
    cm.z = g.z;
    cm.dim = static_cast<std::size_t>(ell_max - ell_min + 1);
    cm.log_mag.resize(cm.dim * cm.dim);
    cm.sign.assign(cm.dim * cm.dim, 1);

    specfun::ensure_tables(2 * ell_max + 2);

    // Row factor: the Mie magnitude and the kernel normalization collapse to
    //   r_l = -1/2 [ln(l-m)! + ln(l+m)!]  (+ 1/2 ln(l/(l+1)) magnetic),
    // so entry(l,l') = exp(r_l + r_l' + ln(l+l')! + (l+l'+1) ln(z/2)), all
    // signs cancelling to +1.
    std::vector<double> row_factor(cm.dim);
    for (std::size_t i = 0; i < cm.dim; ++i) {
        long ell = ell_min + static_cast<long>(i);
        double r = -0.5 * (specfun::log_factorial(ell - m) + specfun::log_factorial(ell + m));
        if (channel == Channel::Magnetic)
            r += 0.5 * (std::log(static_cast<double>(ell)) -
                        std::log(static_cast<double>(ell + 1)));
        row_factor[i] = r;
    }

    const double log_half_z = std::log(0.5 * g.z);
    const long n = static_cast<long>(cm.dim);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n > 128)
#endif
    for (long i = 0; i < n; ++i) {
        long ell = ell_min + i;
        double* row = cm.log_mag.data() + static_cast<std::size_t>(i) * cm.dim;
        for (long j = 0; j < n; ++j) {
            long ell_p = ell_min + j;
            row[j] = row_factor[i] + row_factor[j] +
                     specfun::log_factorial(ell + ell_p) +
                     static_cast<double>(ell + ell_p + 1) * log_half_z;
        }
    }
    return cm;
}

BalancedMatrix balance(const ChannelMatrix& cm) {
    BalancedMatrix bm;
    bm.m = cm.m;
    bm.channel = cm.channel;
    bm.model = cm.model;
    bm.ell_min = cm.ell_min;
    bm.ell_max = cm.ell_max;
    bm.z = cm.z;
    bm.dim = cm.dim;
    const std::size_t n = cm.dim;
    bm.entries.resize(n * n);
    bm.diagonal_logs.resize(n);

    bool all_diag_nonzero = true;
    for (std::size_t i = 0; i < n; ++i)
        if (cm.sign[i * n + i] == 0) all_diag_nonzero = false;

    if (all_diag_nonzero) {
        for (std::size_t i = 0; i < n; ++i) bm.diagonal_logs[i] = cm.log_mag[i * n + i];
    } else {
        // Deterministic fallback: per-index scale from the row/column maximum.
        bm.used_fallback = true;
        for (std::size_t i = 0; i < n; ++i) {
            double best = 0.0;
            bool found = false;
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t idx : {i * n + j, j * n + i}) {
                    if (cm.sign[idx] == 0) continue;
                    if (!found || cm.log_mag[idx] > best) best = cm.log_mag[idx];
                    found = true;
                }
            }
            bm.diagonal_logs[i] = found ? best : 0.0;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t idx = i * n + j;
            if (cm.sign[idx] == 0) {
                bm.entries[idx] = 0.0;
                continue;
            }
            double g = cm.log_mag[idx] - 0.5 * (bm.diagonal_logs[i] + bm.diagonal_logs[j]);
            bm.entries[idx] = cm.sign[idx] * std::exp(g);
        }
    }
    return bm;
}

}  // namespace casimir
