#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gsinc/coeff_seq.hpp"

namespace gsinc {

/// Power series F(z) = sum_n b_n z^n with nonnegative coefficients,
/// evaluated as the stored partial sum on the closed unit disk.
class AnalyticGenerator {
public:
    /// When require_unit_sum is set, construction fails unless the
    /// coefficients can sum to 1:  |sum(b) - 1| <= l1 tail bound + 1e-8.
    explicit AnalyticGenerator(CoeffSeq coeffs, bool require_unit_sum = false);

    /// Partial-sum evaluation (Horner).  Requires |z| <= 1 + 1e-12.
    std::complex<double> eval(std::complex<double> z) const;

    const CoeffSeq& coeffs() const { return coeffs_; }
    bool unit_sum() const { return unit_sum_; }

private:
    CoeffSeq coeffs_;
    bool unit_sum_;
};

/// Finite Blaschke product
///   G(z) = prod_j (z - a_j) / (1 - a_j z),   a_j real, |a_j| < 1,
/// with all poles outside the closed unit disk.
class BlaschkeGenerator {
public:
    explicit BlaschkeGenerator(std::vector<double> params);

    /// Requires |z| <= 1 + 1e-12.
    std::complex<double> eval(std::complex<double> z) const;

    std::span<const double> params() const { return params_; }

    /// G'(1), evaluated in closed form: sum_j (1 + a_j) / (1 - a_j).
    double derivative_at_one() const;

    /// Taylor coefficients of F(z) = (G(z) - 1) / (z - 1), converted into an
    /// AnalyticGenerator with n_terms stored coefficients.
    ///
    /// The Taylor coefficients g_k of G are recovered by trapezoidal
    /// integration over a circle of radius 0.9 (exact for power series up to
    /// the transform length, which is chosen far above n_terms), and
    ///   b_n = 1 - sum_{k<=n} g_k,
    /// using G(1) = 1.  Throws ToleranceError unless |b_{n_terms-1}| < 1e-12,
    /// i.e. the requested length must capture the whole sequence to roundoff.
    AnalyticGenerator to_series(std::size_t n_terms = 64) const;

    /// Boundary kernel phi(t) = Im G(e^{it}) / t, extended to t = 0 by
    /// Richardson extrapolation.  phi(0) = G'(1).
    double boundary_kernel(double t) const;

    static constexpr std::size_t max_series_terms = 1024;

private:
    std::vector<double> params_;
};

} // namespace gsinc
