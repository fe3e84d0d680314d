#ifndef PARASCATTER_EXPANSIONS_HPP
#define PARASCATTER_EXPANSIONS_HPP

#include "parascatter/geometry.hpp"
#include "parascatter/specfun.hpp"

namespace parascatter::expansions {

using specfun::Cplx;
using geometry::ParabolicPoint;
using geometry::Point;

/// Truncation control for the parabolic-cylinder series. max_terms is capped
/// at 60, where the downward recurrence for negative orders stays usable.
struct SeriesControl {
    int max_terms = 60;
    double tail_tol = 1e-12;
};

/// Incident plane wave: wavenumber k, travel direction beta (radians),
/// sigma = sqrt(2k) e^{-i pi/4} (principal root of -2ik).
struct WaveParams {
    double k = 1.0;
    double beta = 0.0;
    Cplx sigma;

    static WaveParams make(double k, double beta);
};

/// Truncated series value with the last-term tail estimate. converged is
/// false when max_terms was reached before the tail fell under tail_tol.
struct SeriesResult {
    Cplx value;
    double tail = 0.0;
    int terms = 0;
    bool converged = true;
};

Cplx plane_wave(double x, double y, const WaveParams& wave);

/// Exact axis-incidence identity e^{ikx} = D_0(sigma xi) D_0(i sigma eta).
Cplx plane_wave_identity(const ParabolicPoint& p, double k);

/// Plane-wave expansion in products of parabolic cylinder functions.
/// Two branches split at grazing incidence; |beta| = pi/2 is rejected.
SeriesResult plane_wave_series(const ParabolicPoint& p, const WaveParams& wave,
                               const SeriesControl& ctrl);

/// Free 2D Green function (Rydberg units, hbar = 2M = 1): -(i/4) H0(k|r-r'|).
Cplx green_direct(const Point& obs, const Point& src, double k);

/// Separable expansion of H0(kR) in parabolic coordinates; the branch is
/// selected by comparing eta and eta'. Equal eta values are rejected (use
/// green_direct). Convergence degrades as the observation eta approaches
/// |xi| + |xi'| + eta_source; the returned tail estimate reports it.
SeriesResult hankel_series(const ParabolicPoint& obs, const ParabolicPoint& src,
                           double k, const SeriesControl& ctrl);

/// Green-function prefactor -i/4 in Rydberg units.
inline constexpr Cplx kGreenPrefactor{0.0, -0.25};

} // namespace parascatter::expansions

#endif
