#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gsinc/kernel.hpp"

namespace gsinc {

/// A signal known through finitely many samples f(n pi), n in a contiguous
/// window [n_min, n_max], reconstructed through a generalized sinc kernel:
///
///   f(t) = sum_{n in window} f(n pi) sinc_b(t - n pi).
///
/// Exactness of the interpolation formula requires sum(b) = 1, so the
/// constructor rejects kernels with |sum(b) - 1| > l1 tail bound + 1e-8.
/// Samples outside the window are taken to be zero.
class SampledSignal {
public:
    SampledSignal(GeneralizedSinc kernel, std::map<long, double> samples);
    SampledSignal(GeneralizedSinc kernel, long n_min, std::vector<double> samples);

    long n_min() const { return n_min_; }
    long n_max() const { return n_min_ + static_cast<long>(samples_.size()) - 1; }
    std::span<const double> samples() const { return samples_; }
    double sample(long n) const; // 0 outside the window

    const GeneralizedSinc& kernel() const { return kernel_; }
    const CascadeFilter& filter() const { return filter_; }

    /// Pointwise reconstruction over the sample window.
    double reconstruct(double t) const;

    /// Fourier transform of the reconstruction,
    ///   sqrt(pi/2) * (sum_n f(n pi) e^{-i n pi xi}) * H(xi).
    /// Vanishes identically for |xi| >= N.
    std::complex<double> spectrum(double xi) const;

    double sample_sq_sum() const { return sample_sq_sum_; } // sum f(n pi)^2

    /// L2 norm of the reconstruction, from the sample-side identity
    /// ||f||^2 = pi l2(b)^2 sum_n f(n pi)^2.
    double l2_norm() const;

private:
    GeneralizedSinc kernel_;
    CascadeFilter filter_;
    long n_min_ = 0;
    std::vector<double> samples_;
    double sample_sq_sum_ = 0.0;
};

/// Both sides of the energy identity:
///   lhs  = integral of f(t)^2 (composite Simpson, certified tail),
///   rhs  = pi l2(b)^2 sum_n f(n pi)^2.
struct ParsevalResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double tail_bound = 0.0; // certified bound on the part of lhs outside the domain
};

/// Integrates f^2 over the window enlarged by quad.half_width on each side.
/// Throws ToleranceError when the tail bound exceeds quad.tolerance.
ParsevalResult parseval_check(const SampledSignal& sig, const QuadratureSpec& quad);

/// Spec whose half-width (margin beyond the sample window) makes the
/// analytic tail bound 8 l1^2 (sum|f_n|)^2 / margin fall below tolerance/2.
QuadratureSpec parseval_quadrature_for_tolerance(const SampledSignal& sig,
                                                 double tolerance);

} // namespace gsinc
