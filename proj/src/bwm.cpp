#include "parascatter/bwm.hpp"

#include "parascatter/parallel.hpp"
#include "parascatter/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace parascatter::bwm {

namespace {

using expansions::kGreenPrefactor;

Cplx diagonal_entry(double k, double ds, DiagonalRule rule) {
    if (rule == DiagonalRule::Midpoint)
        return kGreenPrefactor * specfun::hankel0(k * ds / 2.0) * ds;
    // Leading-order closed form of the self integral of H0 over the segment.
    const double log_term = std::log(k * ds / 4.0) + std::numbers::egamma - 1.0;
    return kGreenPrefactor * ds * Cplx(1.0, 2.0 / std::numbers::pi * log_term);
}

double rcond_estimate(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu) {
    return lu.rcond();
}

} // namespace

BoundaryKernel::BoundaryKernel(const Boundary& b) {
    const int n = b.size();
    dist.resize(n, n);
    for (int i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double d = std::hypot(b.cart[i].x - b.cart[j].x,
                                        b.cart[i].y - b.cart[j].y);
            if (d == 0.0)
                throw std::invalid_argument("BoundaryKernel: coincident midpoints");
            dist(i, j) = d;
            dist(j, i) = d;
        }
    }
}

Eigen::MatrixXcd assemble_M(const BoundaryKernel& kernel, const Boundary& b,
                            double k, DiagonalRule rule) {
    if (k <= 0.0) throw std::invalid_argument("assemble_M: k must be positive");
    const int n = b.size();
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Cplx g = kGreenPrefactor * specfun::hankel0(k * kernel.dist(i, j));
            M(i, j) = g * b.seg_lengths[j];
            M(j, i) = g * b.seg_lengths[i];
        }
        M(i, i) = diagonal_entry(k, b.seg_lengths[i], rule);
    }
    return M;
}

Eigen::MatrixXcd assemble_M(const Boundary& b, double k, DiagonalRule rule) {
    return assemble_M(BoundaryKernel(b), b, k, rule);
}

Eigen::MatrixXcd assemble_T(const Eigen::MatrixXcd& M, const Boundary& b) {
    const int n = b.size();
    if (M.rows() != n || M.cols() != n)
        throw std::invalid_argument("assemble_T: dimension mismatch");
    if (b.impenetrable) {
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
        return -lu.inverse();
    }
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(n, n);
    for (int j = 0; j < n; ++j)
        A.col(j) -= M.col(j) * b.gammas[j];
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    Eigen::MatrixXcd T = lu.inverse();
    for (int i = 0; i < n; ++i)
        T.row(i) *= b.gammas[i];
    return T;
}

BwmSystem solve_system(const Boundary& b, const WaveParams& wave,
                       DiagonalRule rule) {
    BwmSystem sys;
    sys.boundary = b;
    sys.wave = wave;
    sys.rule = rule;
    sys.Mmat = assemble_M(b, wave.k, rule);

    const int n = b.size();
    sys.Phi.resize(n);
    for (int i = 0; i < n; ++i)
        sys.Phi[i] = expansions::plane_wave(b.cart[i].x, b.cart[i].y, wave);

    if (b.impenetrable) {
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.Mmat);
        sys.rcond = rcond_estimate(lu);
        sys.TPhi = -lu.solve(sys.Phi);
    } else {
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(n, n);
        for (int j = 0; j < n; ++j)
            A.col(j) -= sys.Mmat.col(j) * b.gammas[j];
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
        sys.rcond = rcond_estimate(lu);
        Eigen::VectorXcd psi = lu.solve(sys.Phi);
        sys.TPhi.resize(n);
        for (int i = 0; i < n; ++i)
            sys.TPhi[i] = b.gammas[i] * psi[i];
    }
    sys.cond_warning = sys.rcond > 0.0 && sys.rcond < 1e-12;
    return sys;
}

const Eigen::VectorXcd& boundary_solve(const BwmSystem& sys) {
    return sys.TPhi;
}

Eigen::VectorXcd boundary_field(const BwmSystem& sys) {
    return sys.Phi + sys.Mmat * sys.TPhi;
}

std::vector<Cplx> field_at(std::span<const Point> pts, const BwmSystem& sys,
                           int threads, std::vector<bool>* near_field) {
    const int n = sys.boundary.size();
    const double k = sys.wave.k;
    std::vector<Cplx> out(pts.size());
    if (near_field) near_field->assign(pts.size(), false);

    const Eigen::VectorXcd bfield = boundary_field(sys);
    parallel_for(pts.size(), threads, [&](std::size_t idx) {
        const Point& p = pts[idx];
        Cplx acc = expansions::plane_wave(p.x, p.y, sys.wave);
        for (int j = 0; j < n; ++j) {
            const double r = std::hypot(p.x - sys.boundary.cart[j].x,
                                        p.y - sys.boundary.cart[j].y);
            if (r < 0.5 * sys.boundary.seg_lengths[j]) {
                out[idx] = bfield[j];
                if (near_field) (*near_field)[idx] = true;
                return;
            }
            acc += kGreenPrefactor * specfun::hankel0(k * r) *
                   sys.boundary.seg_lengths[j] * sys.TPhi[j];
        }
        out[idx] = acc;
    });
    return out;
}

} // namespace parascatter::bwm
