#include "parascatter/geometry.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parascatter::geometry {

namespace {

// Signed cumulative arc length along {eta = eta0} measured from xi = 0.
double arc_from_apex(double xi, double eta0) {
    const double h = std::hypot(xi, eta0);
    if (eta0 == 0.0)
        return 0.5 * xi * std::abs(xi);
    return 0.5 * (xi * h + eta0 * eta0 * std::log((xi + h) / eta0));
}

// Invert arc_from_apex on [0, hi] by bisection; the map is strictly
// increasing and 90 halvings put the bracket far below the 1e-12 arc
// tolerance for every geometry in range.
double invert_arc(double target, double eta0, double hi) {
    double lo = 0.0;
    for (int it = 0; it < 90; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (arc_from_apex(mid, eta0) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void push_point(Boundary& b, const ParabolicPoint& p, double ds,
                const std::optional<GammaFn>& gamma_fn) {
    b.midpoints.push_back(p);
    b.cart.push_back(parabolic_to_cartesian(p));
    b.seg_lengths.push_back(ds);
    if (gamma_fn)
        b.gammas.push_back((*gamma_fn)(p));
}

} // namespace

Point parabolic_to_cartesian(const ParabolicPoint& p) {
    return {(p.xi * p.xi - p.eta * p.eta) / 2.0, p.xi * p.eta};
}

ParabolicPoint cartesian_to_parabolic(double x, double y) {
    const double r = std::hypot(x, y);
    const double eta = std::sqrt(std::max(r - x, 0.0));
    double xi = std::sqrt(std::max(r + x, 0.0));
    if (y < 0.0)
        xi = -xi;
    else if (y == 0.0 && x < 0.0)
        xi = 0.0;
    return {xi, eta};
}

double scale_factor(const ParabolicPoint& p) {
    return std::hypot(p.xi, p.eta);
}

double arc_length(double xi0, double eta0) {
    if (xi0 <= 0.0 || eta0 < 0.0)
        throw std::invalid_argument("arc_length: requires xi0 > 0, eta0 >= 0");
    return 2.0 * arc_from_apex(xi0, eta0);
}

double billiard_perimeter(const BilliardSpec& spec) {
    if (spec.xi0 <= 0.0 || spec.eta0 <= 0.0)
        throw std::invalid_argument("billiard_perimeter: requires positive xi0, eta0");
    return arc_length(spec.xi0, spec.eta0) + arc_length(spec.eta0, spec.xi0);
}

double pieces_per_wavelength(int n, double perimeter, double k) {
    return 2.0 * std::numbers::pi * n / (perimeter * k);
}

int min_points(double perimeter, double k) {
    if (perimeter <= 0.0 || k <= 0.0)
        throw std::invalid_argument("min_points: requires positive perimeter and k");
    const double raw = std::ceil(5.0 * perimeter * k / std::numbers::pi);
    return std::max(1, static_cast<int>(raw));
}

Boundary discretize_barrier(double xi0, double eta0, int n,
                            const std::optional<GammaFn>& gamma_fn) {
    if (n < 2) throw std::invalid_argument("discretize_barrier: n < 2");
    if (xi0 <= 0.0 || eta0 < 0.0)
        throw std::invalid_argument("discretize_barrier: bad geometry");

    Boundary b;
    b.impenetrable = !gamma_fn.has_value();
    b.closed = false;

    const double half = arc_from_apex(xi0, eta0);
    const double ds = 2.0 * half / n;
    for (int j = 0; j < n; ++j) {
        const double s = -half + (j + 0.5) * ds; // signed arc from the apex
        const double xi = s >= 0.0 ? invert_arc(s, eta0, xi0)
                                   : -invert_arc(-s, eta0, xi0);
        push_point(b, {xi, eta0}, ds, gamma_fn);
    }
    return b;
}

Boundary discretize_billiard(const BilliardSpec& spec, int n,
                             const std::optional<GammaFn>& gamma_fn,
                             ContourAllocation alloc) {
    if (n <= 0 || n % 4 != 0)
        throw std::invalid_argument("discretize_billiard: n must be a positive multiple of 4");
    if (spec.xi0 <= 0.0 || spec.eta0 <= 0.0)
        throw std::invalid_argument("discretize_billiard: bad geometry");

    const double l1_half = arc_from_apex(spec.xi0, spec.eta0);
    const double l2_half = arc_from_apex(spec.eta0, spec.xi0);
    int n1 = n / 4;
    int n2 = n / 4;
    if (alloc == ContourAllocation::Proportional) {
        const int nh = n / 2;
        n1 = static_cast<int>(std::lround(nh * l1_half / (l1_half + l2_half)));
        n1 = std::min(std::max(n1, 1), nh - 1);
        n2 = nh - n1;
    }
    const double d1 = l1_half / n1;
    const double d2 = l2_half / n2;

    Boundary b;
    b.impenetrable = !gamma_fn.has_value();
    b.closed = true;
    b.midpoints.reserve(n);
    b.cart.reserve(n);
    b.seg_lengths.reserve(n);

    // Upper half, walked along the curve: the eta = eta0 contour from the
    // symmetry axis out to the corner, then the xi = xi0 contour from the
    // corner back down to the axis. First midpoints sit ds/2 from the axis.
    std::vector<ParabolicPoint> upper;
    std::vector<double> upper_ds;
    for (int j = 0; j < n1; ++j) {
        const double xi = invert_arc((j + 0.5) * d1, spec.eta0, spec.xi0);
        upper.push_back({xi, spec.eta0});
        upper_ds.push_back(d1);
    }
    for (int j = n2 - 1; j >= 0; --j) {
        const double eta = invert_arc((j + 0.5) * d2, spec.xi0, spec.eta0);
        upper.push_back({spec.xi0, eta});
        upper_ds.push_back(d2);
    }
    for (std::size_t i = 0; i < upper.size(); ++i)
        push_point(b, upper[i], upper_ds[i], gamma_fn);
    // Mirror about the x axis (xi -> -xi), reversed to keep the curve closed.
    for (std::size_t i = upper.size(); i-- > 0;)
        push_point(b, {-upper[i].xi, upper[i].eta}, upper_ds[i], gamma_fn);
    return b;
}

nlohmann::json boundary_to_json(const Boundary& b) {
    nlohmann::json j;
    j["n"] = b.size();
    j["closed"] = b.closed;
    j["impenetrable"] = b.impenetrable;
    auto& mid = j["midpoints"] = nlohmann::json::array();
    for (const auto& p : b.cart)
        mid.push_back({p.x, p.y});
    j["seg_lengths"] = b.seg_lengths;
    if (!b.impenetrable)
        j["gammas"] = b.gammas;
    return j;
}

} // namespace parascatter::geometry
