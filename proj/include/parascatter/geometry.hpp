#ifndef PARASCATTER_GEOMETRY_HPP
#define PARASCATTER_GEOMETRY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace parascatter::geometry {

/// Point in parabolic cylinder coordinates: x = (xi^2 - eta^2)/2, y = xi*eta.
/// xi is signed, eta >= 0; the branch cut lies on the positive x axis.
struct ParabolicPoint {
    double xi = 0.0;
    double eta = 0.0;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

Point parabolic_to_cartesian(const ParabolicPoint& p);

/// Inverse map. eta = sqrt(r-x), xi = sign(y) sqrt(r+x); on the branch cut
/// (y = 0, x > 0) the positive-xi sheet is returned.
ParabolicPoint cartesian_to_parabolic(double x, double y);

/// Metric scale factor h = sqrt(xi^2 + eta^2) = sqrt(2r).
double scale_factor(const ParabolicPoint& p);

/// Length of the parabolic arc {eta = eta0, xi in (-xi0, xi0)}:
/// xi0 sqrt(xi0^2+eta0^2) + eta0^2 ln[(xi0 + sqrt(xi0^2+eta0^2)) / eta0].
/// Continuous limit eta0 -> 0 gives xi0^2.
double arc_length(double xi0, double eta0);

/// Confocal parabolic billiard bounded by the contour eta = eta0 and the
/// mirror pair |xi| = xi0.
struct BilliardSpec {
    double xi0 = 0.0;
    double eta0 = 0.0;
};

double billiard_perimeter(const BilliardSpec& spec);

/// Boundary pieces per wavelength, 2 pi N / (l k).
double pieces_per_wavelength(int n, double perimeter, double k);

/// Minimum segment count for ~10 pieces per wavelength: ceil(5 l k / pi),
/// clamped to at least 1.
int min_points(double perimeter, double k);

/// Per-segment wall strength at a midpoint.
using GammaFn = std::function<double(const ParabolicPoint&)>;

/// Discretized delta wall. Midpoints carry their Cartesian companions and
/// one segment length each; gammas is empty in impenetrable mode.
struct Boundary {
    std::vector<ParabolicPoint> midpoints;
    std::vector<Point> cart;
    std::vector<double> seg_lengths;
    std::vector<double> gammas;
    bool impenetrable = false;
    bool closed = false;

    int size() const { return static_cast<int>(midpoints.size()); }
};

/// Open barrier {eta = eta0, xi in (-xi0, xi0)} split into n equal
/// arc-length segments; midpoints found by inverting the cumulative arc
/// length to 1e-12. gamma_fn == nullopt marks the wall impenetrable.
Boundary discretize_barrier(double xi0, double eta0, int n,
                            const std::optional<GammaFn>& gamma_fn);

/// How the segment budget is split between the two billiard contours.
enum class ContourAllocation {
    EqualCounts,  ///< n/4 midpoints per half-contour
    Proportional, ///< counts proportional to contour length (near-equal ds)
};

/// Closed billiard boundary: half of each contour is discretized with its
/// first midpoint nearest the x axis, the halves are concatenated along the
/// curve, and the set is mirrored about the x axis. Corners fall between
/// midpoints. n must be a positive multiple of 4.
Boundary discretize_billiard(const BilliardSpec& spec, int n,
                             const std::optional<GammaFn>& gamma_fn,
                             ContourAllocation alloc = ContourAllocation::EqualCounts);

nlohmann::json boundary_to_json(const Boundary& b);

} // namespace parascatter::geometry

#endif
