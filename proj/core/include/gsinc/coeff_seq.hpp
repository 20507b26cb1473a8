#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gsinc {

/// Decay model for a coefficient sequence beyond its stored prefix.
///
/// The model determines two things: certified bounds on the l1/l2 norm of the
/// unstored tail, and (where meaningful) a continuation rule used by
/// long-partial-sum evaluations.  Custom sequences carry explicitly declared
/// tail bounds and cannot be continued.
struct DecayClass {
    enum class Kind { Finite, Geometric, PowerLaw, Custom };

    Kind kind = Kind::Finite;
    double param = 0.0; // ratio for Geometric, exponent for PowerLaw

    // Declared tail bounds, used only by Custom.
    double custom_l1_tail = 0.0;
    double custom_l2_tail = 0.0;

    static DecayClass finite();
    static DecayClass geometric(double ratio);   // requires |ratio| < 1
    static DecayClass power_law(double exponent); // requires exponent > 1/2
    static DecayClass custom(double l1_tail = 0.0, double l2_tail = 0.0);
};

/// A finite prefix b_0..b_{N-1} of a real coefficient sequence together with
/// its decay class.
///
/// Invariants enforced at construction:
///  - at least one coefficient, all entries finite,
///  - decay parameters inside their valid ranges.
///
/// Norms are over the stored prefix; *_tail_bound() certify the rest:
///   sum_{n>=N} |b_n|      <= l1_tail_bound()
///   sqrt(sum_{n>=N} b_n^2) <= l2_tail_bound()
/// under the decay model |b_n| <= |b_{N-1}| r^{n-N+1} (geometric, r = |ratio|)
/// or |b_n| <= |b_{N-1}| (N/(n+1))^p (power law).
class CoeffSeq {
public:
    CoeffSeq(std::vector<double> coeffs, DecayClass decay);

    std::size_t size() const { return coeffs_.size(); }
    double operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const double> coeffs() const { return coeffs_; }
    const DecayClass& decay() const { return decay_; }

    double l1_norm() const { return l1_; }
    double l2_norm() const { return l2_; }
    double l2_norm_sq() const { return l2sq_; }
    double sum() const { return sum_; } // signed sum of stored coefficients

    double l1_tail_bound() const { return l1_tail_; }
    double l2_tail_bound() const { return l2_tail_; }

    /// True when the decay class defines a continuation rule (everything
    /// except Custom).
    bool can_extend() const;

    /// Coefficient at index n, using the decay-class continuation for
    /// n >= size().  Throws InputError for Custom sequences past the prefix.
    double coeff_extended(std::size_t n) const;

private:
    std::vector<double> coeffs_;
    DecayClass decay_;
    double l1_ = 0.0;
    double l2_ = 0.0;
    double l2sq_ = 0.0;
    double sum_ = 0.0;
    double l1_tail_ = 0.0;
    double l2_tail_ = 0.0;
};

} // namespace gsinc
