#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsinc/coeff_seq.hpp"

namespace gsinc {

/// sin(x)/x with a degree-6 Taylor guard near 0; sinc(0) = 1.
double sinc(double x);

/// Even frequency response built from unit-length bands:
///   H(xi) = b_n  for n <= |xi| < n+1, n < N,   and 0 for |xi| >= N.
/// Values are returned bit-exactly as stored.
class CascadeFilter {
public:
    explicit CascadeFilter(CoeffSeq coeffs);

    double eval(double xi) const;
    const CoeffSeq& coeffs() const { return coeffs_; }

private:
    CoeffSeq coeffs_;
};

/// Interpolation kernel attached to a coefficient sequence b:
///
///   sinc_b(t) = sum_n b_n sinc(t/2) cos((n + 1/2) t)            (closed form)
///             = sum_n b_n (sin((n+1) t) - sin(n t)) / t         (spectral form)
///
/// The two forms agree identically; the second is the inverse transform of
/// the cascade filter and is kept as an independent evaluation route.
///
/// Key properties (b_n >= 0, sum b_n = l1):
///   sinc_b(k pi) = sum(b) for k = 0 and 0 for other integers k,
///   |sinc_b(t)| <= 4 l1 / (2 + |t|) everywhere, and <= 2 l1 / |t| for |t| >= 2,
///   <sinc_b, sinc_b(. - n pi)> = pi l2^2 delta_{n,0}.
class GeneralizedSinc {
public:
    explicit GeneralizedSinc(CoeffSeq coeffs);

    /// Closed-form evaluation: F(e^{it}) via Horner, then
    /// sinc(t/2) Re{F(e^{it}) e^{it/2}}.
    double eval(double t) const;

    /// Spectral-route evaluation.  Each term (sin((n+1)t) - sin(nt))/t
    /// switches to its own Taylor expansion for |t| < 1e-4.
    double eval_spectral(double t) const;

    /// Certified envelope 4 l1 / (2 + |t|), valid for all t.
    double decay_envelope(double t) const;

    double sum() const { return coeffs_.sum(); } // value at t = 0
    double l1_norm() const { return coeffs_.l1_norm(); }
    double l2_norm() const { return coeffs_.l2_norm(); }
    const CoeffSeq& coeffs() const { return coeffs_; }

private:
    CoeffSeq coeffs_;
};

/// Composite-Simpson parameters for kernel inner products.
///
/// half_width is the domain half-width T (the integrand is covered on
/// [-T, T + shift*pi]); step is the Simpson sample spacing; tolerance is the
/// absolute certification target for the result.  The analytic tail bound
/// for <k, k(. - n pi)> outside the domain is 8 l1^2 / (T - |n| pi); an
/// operation throws ToleranceError when that bound alone exceeds the
/// tolerance, since no amount of sampling could certify the result.
struct QuadratureSpec {
    double half_width;
    double step;
    double tolerance;

    QuadratureSpec();
};

/// Quadrature result together with the analytic bound on everything the
/// finite domain missed.
struct CertifiedValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// Spec whose half-width is enlarged (if needed) so that the tail bound for
/// every |shift| <= max_abs_shift is below tolerance/2.  The half-width is
/// rounded up to a multiple of pi so grid shifts stay on sample points.
QuadratureSpec quadrature_for_tolerance(const GeneralizedSinc& kernel,
                                        int max_abs_shift, double tolerance);

/// <kernel, kernel(. - shift*pi)> by composite Simpson over
/// [-T, T + shift*pi], plus the certified tail bound.
CertifiedValue inner_product_shifted(const GeneralizedSinc& kernel, int shift,
                                     const QuadratureSpec& quad);

/// Batch version; the kernel is tabulated once and every shifted product is
/// formed from the same table, so the cost is one tabulation plus one pass
/// per shift.
std::vector<CertifiedValue> inner_products_shifted(const GeneralizedSinc& kernel,
                                                   std::span<const int> shifts,
                                                   const QuadratureSpec& quad);

} // namespace gsinc
