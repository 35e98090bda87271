#ifndef CASIMIR_ENGINE_HPP
#define CASIMIR_ENGINE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "casimir/core.hpp"
#include "casimir/linalg.hpp"

namespace casimir {

struct PerMTerm {
    int m = 0;
    Channel channel = Channel::Electric;
    double log_det = 0;  // ln det(I - M^(m)_channel), negative for physical blocks
};

struct PhiResult {
    double x = 0;
    MirrorModel model = MirrorModel::Drude;
    double phi = 0;
    std::vector<PerMTerm> per_m_terms;  // ascending m, channels in fixed order
    long ell_max_used = 0;
    int m_max_used = 0;
    // Relative change under the final ell_max doubling; NaN when ell_max was
    // pinned by ell_max_override.
    double convergence_estimate = 0;
};

struct RhoBeta {
    double x = 0;
    MirrorModel model = MirrorModel::Drude;
    double rho = 0;   // Phi x / C
    double beta = 0;  // (rho - 1)/x
    std::optional<double> beta_log_slope;
    double error_estimate = 0;  // propagated convergence estimate
};

struct LogSlope {
    double value = 0;
    double error_estimate = 0;
};

// Phi = -1/2 sum_channel sum_m w_m ln det(I - M^(m)_channel) with w_0 = 1,
// w_m = 2 for m > 0 (+-m degeneracy). The m-sum stops after two consecutive
// terms below m_rel_tol relative to the accumulated sum; ell_max is doubled
// until the relative change drops below refine_tol (unless overridden).
// Throws unconverged_error when the doubling exceeds ell_max_budget.
PhiResult phi(const Geometry& g, MirrorModel model, const SolverConfig& cfg = {});

RhoBeta rho(const Geometry& g, MirrorModel model, const SolverConfig& cfg = {});

// d beta / d ln x by central differences at steps h and h/2 with one
// Richardson extrapolation; the error estimate is the level difference / 3.
LogSlope beta_log_slope(double x, MirrorModel model, const SolverConfig& cfg = {});

// Same finite-difference machinery over an arbitrary beta(x); the engine op
// delegates here, and tests can inject synthetic functions.
LogSlope log_slope_of(const std::function<double(double)>& beta_fn, double x, double h);

// Free energy -kT Phi, entropy Phi, zero internal energy, and the force
//   F = -(C kT / L) (1/x - d beta/d ln x).
ThermalOutput force(const Geometry& g, MirrorModel model, double kT,
                    const SolverConfig& cfg = {});

// Phi_perfect / Phi_drude at equal convergence settings.
double ratio_perfect_drude(double x, const SolverConfig& cfg = {});

class unconverged_error : public std::runtime_error {
  public:
    unconverged_error(const std::string& msg, PhiResult partial_result)
        : std::runtime_error(msg), partial(std::move(partial_result)) {}
    PhiResult partial;
};

}  // namespace casimir

#endif
