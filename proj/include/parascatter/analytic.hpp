#ifndef PARASCATTER_ANALYTIC_HPP
#define PARASCATTER_ANALYTIC_HPP

#include "parascatter/expansions.hpp"

#include <Eigen/Dense>

namespace parascatter::analytic {

using expansions::Cplx;
using expansions::SeriesControl;
using expansions::SeriesResult;
using expansions::WaveParams;
using geometry::ParabolicPoint;

/// Wall-strength profile along the barrier.
enum class StrengthProfile {
    Curvature, ///< gamma(s) = gamma0 sqrt(pi/8) / sqrt(eta0^2 + xi^2)
    Constant,  ///< gamma(s) = gamma0 sqrt(pi/8)
};

/// Parabolic delta wall. eta0 = 0 degenerates to the knife edge;
/// xi0 = infinity extends the wall over the whole parabola; gamma0 =
/// infinity marks a hard (Dirichlet) wall.
struct BarrierSpec {
    double eta0 = 0.5;
    double xi0 = std::numeric_limits<double>::infinity();
    double gamma0 = 1.0;
    StrengthProfile profile = StrengthProfile::Curvature;

    bool infinite_extent() const { return std::isinf(xi0); }
    bool impenetrable() const { return std::isinf(gamma0); }
};

/// Q_m(u, v) = D_{-m-1}(sigma u) D_m(i sigma v).
Cplx q_factor(int m, double u, double v, const WaveParams& wave);

/// Axis-incidence scattered field of the infinitely long wall with
/// curvature-matched strength. Closed form; gamma0 may be infinite.
Cplx infinite_barrier_axis(const ParabolicPoint& p, double eta0, double gamma0,
                           double k);

/// General incidence |beta| < pi/2 for the infinite curvature-matched wall.
SeriesResult infinite_barrier_general(const ParabolicPoint& p, double eta0,
                                      double gamma0, const WaveParams& wave,
                                      const SeriesControl& ctrl);

/// Knife edge (eta0 = 0) with curvature-matched strength, axis incidence.
Cplx knife_edge(const ParabolicPoint& p, double gamma0, double k);

/// Moment system for the finite constant-strength wall. F couples the
/// weighted boundary moments; p holds the incident moments; solving fills
/// gamma_c = gamma0 * c, the coefficients the field sum consumes.
///
/// The moment basis is polynomial-like on (-xi0, xi0): cond(F) grows
/// exponentially with the order, and the boundary-trace kernel sits on the
/// edge of its convergence region, so useful orders are small (~10). Solves
/// are row/column equilibrated; rcond below 1e-12 only raises a warning.
struct CoeffSystem {
    Eigen::MatrixXcd F;
    Eigen::VectorXcd p;
    Eigen::VectorXcd c;
    Eigen::VectorXcd gamma_c;
    double eta0 = 0.0;
    double xi0 = 0.0;
    WaveParams wave;
    int order = 0;
    int panels = 0;
    bool quad_converged = false;
    double quad_residual = 0.0;
    double rcond = 1.0;
    bool cond_warning = false;
    bool solved = false;
};

/// Gauss-Legendre panel quadrature with automatic panel doubling until the
/// entries settle to 1e-10 relative (or the panel cap is hit; then
/// quad_converged is false and quad_residual reports the last change).
CoeffSystem assemble_F(double eta0, double xi0, const WaveParams& wave, int order);

/// c = (I + i alpha gamma0 F)^{-1} p, then gamma_c = gamma0 c.
void solve_constant(CoeffSystem& sys, double gamma0);

/// Hard-wall limit: gamma_c = (i alpha)^{-1} F^{-1} p.
void solve_impenetrable(CoeffSystem& sys);

/// Field sum shared by both solve paths; requires a solved system.
SeriesResult finite_barrier_field(const ParabolicPoint& p, const CoeffSystem& sys,
                                  const SeriesControl& ctrl);

/// Convenience wrappers matching the two solve paths.
SeriesResult finite_barrier_constant(const ParabolicPoint& p, CoeffSystem& sys,
                                     double gamma0, const SeriesControl& ctrl);
SeriesResult finite_barrier_impenetrable(const ParabolicPoint& p, CoeffSystem& sys,
                                         const SeriesControl& ctrl);

} // namespace parascatter::analytic

#endif
