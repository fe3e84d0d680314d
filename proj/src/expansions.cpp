#include "parascatter/expansions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parascatter::expansions {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Cplx kI{0.0, 1.0};
} // namespace

WaveParams WaveParams::make(double k, double beta) {
    if (k <= 0.0) throw std::invalid_argument("WaveParams: k must be positive");
    WaveParams w;
    w.k = k;
    w.beta = beta;
    const double r = std::sqrt(2.0 * k);
    w.sigma = Cplx(r * std::numbers::sqrt2 / 2.0, -r * std::numbers::sqrt2 / 2.0);
    return w;
}

Cplx plane_wave(double x, double y, const WaveParams& wave) {
    const double phase = wave.k * (x * std::cos(wave.beta) + y * std::sin(wave.beta));
    return std::polar(1.0, phase);
}

Cplx plane_wave_identity(const ParabolicPoint& p, double k) {
    const WaveParams w = WaveParams::make(k, 0.0);
    const Cplx a = w.sigma * p.xi;
    const Cplx b = kI * w.sigma * p.eta;
    return std::exp(-a * a / 4.0) * std::exp(-b * b / 4.0);
}

SeriesResult plane_wave_series(const ParabolicPoint& p, const WaveParams& wave,
                               const SeriesControl& ctrl) {
    const double b2 = wave.beta / 2.0;
    if (std::abs(std::abs(wave.beta) - kPi / 2.0) < 1e-14)
        throw std::domain_error("plane_wave_series: grazing incidence |beta| = pi/2 excluded");
    const bool head_on = std::abs(wave.beta) < kPi / 2.0;

    // Branch data: ratio^m / m! against the two PCF families.
    const double ratio = head_on ? std::tan(b2) : 1.0 / std::tan(b2);
    const double front = head_on ? 1.0 / std::cos(b2)
                                 : 1.0 / std::sin(std::abs(wave.beta) / 2.0);
    const Cplx arg_xi = head_on ? wave.sigma * p.xi : kI * wave.sigma * p.xi;
    const Cplx arg_eta = head_on ? kI * wave.sigma * p.eta : wave.sigma * p.eta;

    const int mmax = std::min(ctrl.max_terms, 60);
    const auto dxi = specfun::pcf_nonneg_batch(mmax - 1, arg_xi);
    const auto deta = specfun::pcf_nonneg_batch(mmax - 1, arg_eta);

    SeriesResult res;
    Cplx sum(0.0, 0.0);
    Cplx coeff(1.0, 0.0); // i^m ratio^m / m!
    for (int m = 0; m < mmax; ++m) {
        const Cplx term = coeff * dxi[m] * deta[m];
        sum += term;
        res.tail = std::abs(term) * front;
        res.terms = m + 1;
        if (m > 0 && std::abs(term) <= ctrl.tail_tol * std::abs(sum)) {
            res.converged = true;
            res.value = front * sum;
            return res;
        }
        coeff *= kI * ratio / static_cast<double>(m + 1);
    }
    res.converged = res.tail <= ctrl.tail_tol * std::abs(sum) * front;
    res.value = front * sum;
    return res;
}

Cplx green_direct(const Point& obs, const Point& src, double k) {
    const double r = std::hypot(obs.x - src.x, obs.y - src.y);
    if (r == 0.0)
        throw std::domain_error("green_direct: zero separation");
    return kGreenPrefactor * specfun::hankel0(k * r);
}

SeriesResult hankel_series(const ParabolicPoint& obs, const ParabolicPoint& src,
                           double k, const SeriesControl& ctrl) {
    if (obs.eta == src.eta)
        throw std::domain_error("hankel_series: equal eta selects no branch");
    const WaveParams w = WaveParams::make(k, 0.0);
    const Cplx sigma = w.sigma;

    // Outer point carries the traveling factor D_{-m-1}(sigma eta_>); the
    // inner point carries the standing pair D_m(sigma xi) D_m(i sigma eta_<).
    const ParabolicPoint& outer = obs.eta > src.eta ? obs : src;
    const ParabolicPoint& inner = obs.eta > src.eta ? src : obs;

    const int mmax = std::min(ctrl.max_terms, 60);
    const auto d_xi_out = specfun::pcf_nonneg_batch(mmax - 1, sigma * outer.xi);
    const auto d_xi_in = specfun::pcf_nonneg_batch(mmax - 1, sigma * inner.xi);
    const auto d_eta_in = specfun::pcf_nonneg_batch(mmax - 1, kI * sigma * inner.eta);
    const auto d_eta_out = specfun::pcf_neg_batch(mmax, sigma * outer.eta);

    const Cplx front = std::sqrt(8.0 / kPi) / kI;
    SeriesResult res;
    Cplx sum(0.0, 0.0);
    double inv_fact = 1.0;
    Cplx phase(1.0, 0.0); // (-i)^m
    for (int m = 0; m < mmax; ++m) {
        const Cplx term = phase * inv_fact * d_xi_in[m] * d_eta_in[m] *
                          d_xi_out[m] * d_eta_out[m];
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
            res.converged = false;
            break;
        }
        sum += term;
        res.tail = std::abs(term) * std::abs(front);
        res.terms = m + 1;
        if (m > 1 && std::abs(term) <= ctrl.tail_tol * std::abs(sum)) {
            res.converged = true;
            res.value = front * sum;
            return res;
        }
        phase *= -kI;
        inv_fact /= m + 1;
    }
    res.converged = false;
    res.value = front * sum;
    return res;
}

} // namespace parascatter::expansions
