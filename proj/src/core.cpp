#include "casimir/core.hpp"

#include <cmath>

namespace casimir {

Geometry make_geometry(double L, double R) {
    if (!(L > 0.0) || !(R > 0.0) || !std::isfinite(L) || !std::isfinite(R))
        throw std::domain_error("make_geometry: L and R must be positive finite lengths");
    Geometry g;
    g.L = L;
    g.R = R;
    g.x = L / R;
    g.bigL = L + R;
    g.z = 1.0 / (1.0 + g.x);
    return g;
}

Geometry make_geometry_from_x(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("make_geometry_from_x: x must be positive and finite");
    return make_geometry(x, 1.0);
}

double pfa_phi(const Geometry& g, MirrorModel model) {
    return pfa_constant(model) / g.x;
}

void SolverConfig::validate() const {
    if (!(eta > 0.0)) throw std::domain_error("SolverConfig: eta must be positive");
    for (double t : {m_rel_tol, refine_tol}) {
        if (!(t > 0.0 && t < 1.0))
            throw std::domain_error("SolverConfig: tolerances must lie in (0, 1)");
    }
    if (!(log_slope_step > 0.0))
        throw std::domain_error("SolverConfig: log_slope_step must be positive");
    if (ell_max_budget < 1)
        throw std::domain_error("SolverConfig: ell_max_budget must be >= 1");
    if (ell_max_override && *ell_max_override < 1)
        throw std::domain_error("SolverConfig: ell_max_override must be >= 1");
    if (worker_count < 0)
        throw std::domain_error("SolverConfig: worker_count must be >= 0");
}

}  // namespace casimir
