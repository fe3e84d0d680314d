#include "parascatter/specfun.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parascatter::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Weideman rational approximation of w(z) on the closed upper half-plane.
// The Fourier coefficients of f(theta) = e^{-t^2}(L^2+t^2), t = L tan(theta/2),
// sampled on 4N points, give a degree-(N-1) polynomial in Z = (L+iz)/(L-iz).
constexpr int kWeidemanN = 48;

struct WeidemanTable {
    double L;
    std::array<double, kWeidemanN> a; // a[n-1] multiplies Z^{n-1}
    WeidemanTable() {
        const int M = 2 * kWeidemanN;
        const int M2 = 2 * M;
        L = std::sqrt(kWeidemanN / std::sqrt(2.0));
        std::array<double, 2 * 2 * kWeidemanN> f{};
        for (int j = 0; j < M2; ++j) {
            const double theta = (j <= M ? j : j - M2) * kPi / M;
            if (j == M) { f[j] = 0.0; continue; } // t -> infinity
            const double t = L * std::tan(theta / 2.0);
            f[j] = std::exp(-t * t) * (L * L + t * t);
        }
        for (int n = 1; n <= kWeidemanN; ++n) {
            double re = 0.0;
            for (int j = 0; j < M2; ++j)
                re += f[j] * std::cos(2.0 * kPi * j * n / M2);
            a[n - 1] = re / M2;
        }
    }
};

const WeidemanTable& weideman() {
    static const WeidemanTable table;
    return table;
}

// Laplace continued fraction, accurate for large |z| in the upper half-plane.
Cplx faddeeva_cf(Cplx z, int depth) {
    Cplx t(0.0, 0.0);
    for (int n = depth; n >= 1; --n)
        t = (0.5 * n) / (z - t);
    return Cplx(0.0, 1.0 / kSqrtPi) / (z - t);
}

Cplx faddeeva_upper(Cplx z) {
    const double az2 = std::norm(z);
    if (az2 >= 64.0) {
        const int depth = az2 >= 256.0 ? 8 : 16;
        return faddeeva_cf(z, depth);
    }
    const WeidemanTable& w = weideman();
    const Cplx iz(-z.imag(), z.real());
    const Cplx d = w.L - iz;
    const Cplx Z = (w.L + iz) / d;
    Cplx p(0.0, 0.0);
    for (int n = kWeidemanN - 1; n >= 0; --n)
        p = p * Z + w.a[n];
    return 2.0 * p / (d * d) + (1.0 / kSqrtPi) / d;
}

} // namespace

Cplx faddeeva_w(Cplx z) {
    if (z.imag() >= 0.0)
        return faddeeva_upper(z);
    // w(z) = 2 e^{-z^2} - w(-z); e^{-z^2} may overflow deep below the axis.
    return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

Cplx erfc_complex(Cplx z) {
    if (z.real() < 0.0)
        return 2.0 - erfc_complex(-z);
    const Cplx iz(-z.imag(), z.real());
    return std::exp(-z * z) * faddeeva_upper(iz);
}

std::vector<Cplx> pcf_nonneg_batch(int mmax, Cplx z) {
    if (mmax < 0) throw std::invalid_argument("pcf_nonneg_batch: mmax < 0");
    std::vector<Cplx> out(mmax + 1);
    const Cplx gauss = std::exp(-z * z / 4.0);
    const Cplx x = z / std::numbers::sqrt2;
    Cplx h_prev(1.0, 0.0); // H_0
    out[0] = gauss;
    if (mmax == 0) return out;
    Cplx h = 2.0 * x; // H_1
    out[1] = gauss * h * std::exp2(-0.5);
    for (int m = 2; m <= mmax; ++m) {
        const Cplx h_next = 2.0 * x * h - 2.0 * (m - 1) * h_prev;
        h_prev = h;
        h = h_next;
        out[m] = gauss * h * std::exp2(-0.5 * m);
    }
    return out;
}

Cplx pcf_nonneg(int m, Cplx z) {
    if (m < 0) throw std::invalid_argument("pcf_nonneg: m < 0");
    return pcf_nonneg_batch(m, z)[m];
}

std::vector<Cplx> pcf_neg_batch(int mmax, Cplx z) {
    if (mmax < 1) throw std::invalid_argument("pcf_neg_batch: mmax < 1");
    std::vector<Cplx> out(mmax);
    const Cplx gauss = std::exp(-z * z / 4.0);
    const Cplx d0 = gauss;
    Cplx upper = d0;
    Cplx cur = std::sqrt(kPi / 2.0) * gauss *
               faddeeva_w(Cplx(0.0, 1.0) * z / std::numbers::sqrt2);
    out[0] = cur;
    for (int m = 1; m < mmax; ++m) {
        const double nu = -static_cast<double>(m);
        const Cplx next = (z * cur - upper) / nu;
        upper = cur;
        cur = next;
        out[m] = cur;
    }
    return out;
}

Cplx pcf_neg(int m, Cplx z) {
    if (m < 1) throw std::invalid_argument("pcf_neg: m < 1");
    const Cplx v = pcf_neg_batch(m, z)[m - 1];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::overflow_error("pcf_neg: recurrence overflow");
    return v;
}

Cplx hankel0(double x) {
    if (!(x > 0.0))
        throw std::domain_error("hankel0: requires x > 0");
    static const auto* silence = gsl_set_error_handler_off();
    (void)silence;
    gsl_sf_result j0, y0;
    const int sj = gsl_sf_bessel_J0_e(x, &j0);
    const int sy = gsl_sf_bessel_Y0_e(x, &y0);
    if (sj != GSL_SUCCESS || sy != GSL_SUCCESS)
        throw std::domain_error("hankel0: evaluation failed");
    return {j0.val, y0.val};
}

} // namespace parascatter::specfun
