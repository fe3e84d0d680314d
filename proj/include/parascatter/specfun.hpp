#ifndef PARASCATTER_SPECFUN_HPP
#define PARASCATTER_SPECFUN_HPP

#include <complex>
#include <vector>

namespace parascatter::specfun {

using Cplx = std::complex<double>;

/// Faddeeva function w(z) = e^{-z^2} erfc(-iz) for arbitrary complex z.
/// Rational series in the upper half-plane, asymptotic continued fraction
/// for large |z|, reflection w(-z) = 2 e^{-z^2} - w(z) below the real axis.
Cplx faddeeva_w(Cplx z);

/// Complementary error function of complex argument.
Cplx erfc_complex(Cplx z);

/// Parabolic cylinder function D_m(z) for integer order m >= 0:
/// 2^{-m/2} e^{-z^2/4} H_m(z/sqrt(2)).
Cplx pcf_nonneg(int m, Cplx z);

/// D_0(z) .. D_mmax(z) in one pass of the Hermite recurrence.
std::vector<Cplx> pcf_nonneg_batch(int mmax, Cplx z);

/// D_{-m}(z) for m >= 1. D_{-1} from the scaled Faddeeva form
/// sqrt(pi/2) e^{-z^2/4} w(iz/sqrt(2)); deeper orders by downward
/// recurrence D_{nu-1} = (z D_nu - D_{nu+1}) / nu.
/// Throws std::overflow_error if intermediates leave the representable range.
Cplx pcf_neg(int m, Cplx z);

/// D_{-1}(z) .. D_{-mmax}(z). Index i holds D_{-(i+1)}.
/// Accuracy note: the recurrence is exact at small |z| but loses digits in
/// the cancellation regime m <~ |z|^2 (it reproduces the asymptotic decay
/// z^{-m-1} e^{-z^2/4} through repeated near-cancellation). Callers that sum
/// series against 1/m! weights are insensitive to this; see the tests for
/// the measured profile.
std::vector<Cplx> pcf_neg_batch(int mmax, Cplx z);

/// Zeroth-order Hankel function of the first kind, J_0(x) + i Y_0(x).
/// Throws std::domain_error for x <= 0.
Cplx hankel0(double x);

} // namespace parascatter::specfun

#endif
