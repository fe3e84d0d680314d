#ifndef PARASCATTER_BWM_HPP
#define PARASCATTER_BWM_HPP

#include "parascatter/expansions.hpp"
#include "parascatter/geometry.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace parascatter::bwm {

using expansions::Cplx;
using expansions::WaveParams;
using geometry::Boundary;
using geometry::Point;

/// Self-term quadrature for the boundary Green matrix diagonal.
enum class DiagonalRule {
    /// Closed-form small-argument integral of H0 over the segment:
    /// ds [1 + (2i/pi)(ln(k ds / 4) + gamma_E - 1)] times the Green prefactor.
    /// Reproduces the tabulated billiard spectra at N=200 and is the default.
    Integrated,
    /// Midpoint value on each half segment: H0(k ds / 2) ds. Converges to the
    /// same spectra but roughly an order of magnitude slower in N.
    Midpoint,
};

/// Pairwise midpoint distances, reusable across wavenumbers.
struct BoundaryKernel {
    Eigen::MatrixXd dist;
    explicit BoundaryKernel(const Boundary& b);
};

/// Boundary Green matrix: off-diagonal G0(r_i, r_j) ds_j, diagonal per rule.
/// Coincident midpoints are rejected.
Eigen::MatrixXcd assemble_M(const Boundary& b, double k,
                            DiagonalRule rule = DiagonalRule::Integrated);
Eigen::MatrixXcd assemble_M(const BoundaryKernel& kernel, const Boundary& b,
                            double k, DiagonalRule rule = DiagonalRule::Integrated);

/// Boundary propagator. Impenetrable walls: T = -M^{-1}. Finite strengths:
/// T = Gamma (I - M Gamma)^{-1} with Gamma = diag(gamma_j).
Eigen::MatrixXcd assemble_T(const Eigen::MatrixXcd& M, const Boundary& b);

/// One solved scattering configuration at fixed wavenumber.
struct BwmSystem {
    Boundary boundary;
    WaveParams wave;
    DiagonalRule rule = DiagonalRule::Integrated;
    Eigen::MatrixXcd Mmat;
    Eigen::VectorXcd Phi;   ///< incident wave at midpoints
    Eigen::VectorXcd TPhi;  ///< effective source strengths gamma_j psi_j
    double rcond = 1.0;
    bool cond_warning = false;
};

/// Assemble M, factorize, and solve for TPhi without forming the full T.
BwmSystem solve_system(const Boundary& b, const WaveParams& wave,
                       DiagonalRule rule = DiagonalRule::Integrated);

/// TPhi of a solved system; for finite-strength walls the boundary wave
/// itself is psi_j = (TPhi)_j / gamma_j wherever gamma_j > 0.
const Eigen::VectorXcd& boundary_solve(const BwmSystem& sys);

/// Scattered field psi at the boundary midpoints, reconstructed through the
/// same quadrature the solve used (phi + M TPhi). Zero for impenetrable
/// walls up to the factorization residual.
Eigen::VectorXcd boundary_field(const BwmSystem& sys);

/// Field evaluation: psi(r) = phi(r) + sum_j G0(r, r_j) ds_j (TPhi)_j.
/// Points within ds/2 of a midpoint return the boundary-solved value there
/// and are flagged in `near_field` when the caller provides it.
std::vector<Cplx> field_at(std::span<const Point> pts, const BwmSystem& sys,
                           int threads = 1,
                           std::vector<bool>* near_field = nullptr);

} // namespace parascatter::bwm

#endif
