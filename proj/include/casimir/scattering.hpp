#ifndef CASIMIR_SCATTERING_HPP
#define CASIMIR_SCATTERING_HPP

#include <cstdint>
#include <vector>

#include "casimir/core.hpp"
#include "casimir/logvalue.hpp"

namespace casimir {

// Low-frequency Mie amplitude coefficient: the constant c such that the
// amplitude behaves as c * xi~^(2l+1) for reduced frequency xi~ -> 0.
// Electric: sign (-1)^l, magnitude (l+1)/(l (2l+1)!! (2l-1)!!), identical for
// Drude and perfect mirrors.
LogValue electric_coefficient(long ell, MirrorModel model);

// Magnetic: perfect mirrors get -(l/(l+1)) times the electric coefficient;
// for Drude the TE response carries an extra power of xi~ and drops out.
LogValue magnetic_coefficient(long ell, MirrorModel model);

// xi -> 0 limit of the plane-reflection translation element between
// multipoles l and l' at azimuthal order m, in the symmetric normalization:
//
//   K^(m)_{ll'} = (-1)^(l+l') S_l S_l' (l+l')! (z/2)^(l+l'+1),
//   S_l = sqrt( l (2l+1)!! (2l-1)!! / ((l+1) (l-m)! (l+m)!) )
//
// The k-integral behind it is int_0^inf dk k^(l+l') e^(-2kL) with the
// zero-frequency Fresnel amplitude (r_TM = +1, r_TE = -1) folded in; the
// magnitude is channel-independent.
LogValue translation_kernel(long ell, long ell_prime, int m, Channel channel, double z);

// One (m, channel) block of the zero-frequency round-trip operator.
// entry(l, l') = sqrt(Mie(l) Mie(l')) x TranslationKernel(l, l', m); with the
// Mie and Fresnel signs folded in, every entry is positive:
//
//   electric: (z/2)^(l+l'+1) (l+l')! / sqrt((l-m)!(l+m)!(l'-m)!(l'+m)!)
//   magnetic: sqrt(l l' / ((l+1)(l'+1))) x electric
struct ChannelMatrix {
    int m = 0;
    Channel channel = Channel::Electric;
    MirrorModel model = MirrorModel::Drude;
    long ell_min = 1;
    long ell_max = 1;
    double z = 0;
    std::size_t dim = 0;
    std::vector<double> log_mag;  // row-major, dim x dim
    std::vector<std::int8_t> sign;

    LogValue at(std::size_t i, std::size_t j) const {
        return LogValue::from_log(sign[i * dim + j], log_mag[i * dim + j]);
    }
};

ChannelMatrix build_channel_matrix(const Geometry& g, MirrorModel model, Channel channel,
                                   int m, long ell_max);

// Geometric-mean diagonal balancing: entries become
// s_ij exp(g_ij - (sigma_i + sigma_j)/2) with sigma_i = g_ii. The factored
// pair (entries, diagonal_logs) represents M exactly, so ln det(I - M) is
// preserved. A zero diagonal entry switches sigma to the row/column maximum
// (deterministic fallback, flagged).
struct BalancedMatrix {
    int m = 0;
    Channel channel = Channel::Electric;
    MirrorModel model = MirrorModel::Drude;
    long ell_min = 1;
    long ell_max = 1;
    double z = 0;
    std::size_t dim = 0;
    std::vector<double> entries;        // row-major, O(1) magnitudes
    std::vector<double> diagonal_logs;  // per-index scale sigma_i
    bool used_fallback = false;
};

BalancedMatrix balance(const ChannelMatrix& cm);

}  // namespace casimir

#endif
