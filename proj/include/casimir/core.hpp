#ifndef CASIMIR_CORE_HPP
#define CASIMIR_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

// Riemann zeta(3), full double precision.
inline constexpr double kZeta3 = 1.2020569031595942854;

enum class MirrorModel { Drude, Perfect };

enum class Channel { Electric, Magnetic };

inline const char* to_string(MirrorModel m) {
    return m == MirrorModel::Drude ? "drude" : "perfect";
}

inline const char* to_string(Channel c) {
    return c == Channel::Electric ? "electric" : "magnetic";
}

// Channels admitted by a mirror model. The Drude TE reflection vanishes at
// zero frequency, so only the electric (TM) channel survives; perfect
// mirrors keep both.
inline std::vector<Channel> channels(MirrorModel m) {
    if (m == MirrorModel::Drude) return {Channel::Electric};
    return {Channel::Electric, Channel::Magnetic};
}

// PFA normalization constant C: Phi_PFA(x) = C / x.
inline double pfa_constant(MirrorModel m) {
    return m == MirrorModel::Drude ? kZeta3 / 8.0 : kZeta3 / 4.0;
}

// Plane-sphere geometry. Only the aspect ratio x = L/R enters the physics;
// all derived ratios are computed from x so that (L, R) -> (cL, cR) with an
// exactly representable scale factor reproduces bit-identical results.
struct Geometry {
    double L = 0;     // surface-to-surface distance
    double R = 0;     // sphere radius
    double x = 0;     // aspect ratio L/R
    double bigL = 0;  // center-to-plane distance L + R
    double z = 0;     // R/(L+R) computed as 1/(1+x)
};

Geometry make_geometry(double L, double R);

// Geometry with unit radius, for callers that specify x directly.
Geometry make_geometry_from_x(double x);

// PFA prediction for Phi at this geometry.
double pfa_phi(const Geometry& g, MirrorModel model);

struct SolverConfig {
    std::optional<long> ell_max_override;  // fixed multipole cutoff, no refinement
    double eta = 6.0;                      // automatic cutoff ell_max = ceil(eta/x)
    double m_rel_tol = 1e-10;              // m-sum termination tolerance
    double refine_tol = 1e-8;              // ell_max doubling tolerance
    double log_slope_step = 0.05;          // step h in ln x for numerical slopes
    int worker_count = 0;                  // 0 = hardware default
    long ell_max_budget = 20000;           // refinement abort threshold
    std::string cache_path;                // optional result cache (CLI)

    void validate() const;
};

// Thermodynamic outputs in the caller's energy units (kT supplied).
struct ThermalOutput {
    double kT = 0;
    double free_energy = 0;      // -kT * Phi
    double entropy_over_kB = 0;  // Phi
    double internal_energy = 0;  // identically zero in this limit
    double force = 0;            // energy / length, negative = attractive
};

// det(I - M) developed a nonpositive pivot or vanished: the round trip is
// not a contraction, which signals an assembly bug or unphysical input.
class non_contraction_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class degenerate_fit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace casimir

#endif
