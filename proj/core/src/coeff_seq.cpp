#include "gsinc/coeff_seq.hpp"

#include <cmath>
#include <limits>

#include "gsinc/errors.hpp"

namespace gsinc {

DecayClass DecayClass::finite() {
    return DecayClass{Kind::Finite, 0.0, 0.0, 0.0};
}

DecayClass DecayClass::geometric(double ratio) {
    if (!(std::abs(ratio) < 1.0))
        throw InputError("geometric decay ratio must satisfy |ratio| < 1");
    return DecayClass{Kind::Geometric, ratio, 0.0, 0.0};
}

DecayClass DecayClass::power_law(double exponent) {
    if (!(exponent > 0.5))
        throw InputError("power-law decay exponent must exceed 1/2");
    return DecayClass{Kind::PowerLaw, exponent, 0.0, 0.0};
}

DecayClass DecayClass::custom(double l1_tail, double l2_tail) {
    if (!(l1_tail >= 0.0) || !(l2_tail >= 0.0))
        throw InputError("custom decay tail bounds must be nonnegative");
    return DecayClass{Kind::Custom, 0.0, l1_tail, l2_tail};
}

CoeffSeq::CoeffSeq(std::vector<double> coeffs, DecayClass decay)
    : coeffs_(std::move(coeffs)), decay_(decay) {
    if (coeffs_.empty())
        throw InputError("coefficient sequence must have at least one entry");
    for (double b : coeffs_) {
        if (!std::isfinite(b))
            throw InputError("coefficient sequence contains a non-finite entry");
    }
    switch (decay_.kind) {
    case DecayClass::Kind::Geometric:
        if (!(std::abs(decay_.param) < 1.0))
            throw InputError("geometric decay ratio must satisfy |ratio| < 1");
        break;
    case DecayClass::Kind::PowerLaw:
        if (!(decay_.param > 0.5))
            throw InputError("power-law decay exponent must exceed 1/2");
        break;
    case DecayClass::Kind::Finite:
    case DecayClass::Kind::Custom:
        break;
    }

    for (double b : coeffs_) {
        l1_ += std::abs(b);
        l2sq_ += b * b;
        sum_ += b;
    }
    l2_ = std::sqrt(l2sq_);

    const double last = std::abs(coeffs_.back());
    const double n = static_cast<double>(coeffs_.size());
    switch (decay_.kind) {
    case DecayClass::Kind::Finite:
        l1_tail_ = 0.0;
        l2_tail_ = 0.0;
        break;
    case DecayClass::Kind::Geometric: {
        // |b_k| <= last * r^{k-N+1} for k >= N gives geometric tails.
        const double r = std::abs(decay_.param);
        l1_tail_ = last * r / (1.0 - r);
        l2_tail_ = last * r / std::sqrt(1.0 - r * r);
        break;
    }
    case DecayClass::Kind::PowerLaw: {
        // |b_k| <= last * (N/(k+1))^p for k >= N; integral comparison.
        const double p = decay_.param;
        l1_tail_ = p > 1.0 ? last * n / (p - 1.0)
                           : std::numeric_limits<double>::infinity();
        l2_tail_ = last * std::sqrt(n / (2.0 * p - 1.0));
        break;
    }
    case DecayClass::Kind::Custom:
        l1_tail_ = decay_.custom_l1_tail;
        l2_tail_ = decay_.custom_l2_tail;
        break;
    }
}

bool CoeffSeq::can_extend() const {
    return decay_.kind != DecayClass::Kind::Custom;
}

double CoeffSeq::coeff_extended(std::size_t n) const {
    if (n < coeffs_.size())
        return coeffs_[n];
    const double last = coeffs_.back();
    const double size = static_cast<double>(coeffs_.size());
    switch (decay_.kind) {
    case DecayClass::Kind::Finite:
        return 0.0;
    case DecayClass::Kind::Geometric:
        return last * std::pow(decay_.param,
                               static_cast<double>(n) - (size - 1.0));
    case DecayClass::Kind::PowerLaw:
        return last * std::pow(size / (static_cast<double>(n) + 1.0),
                               decay_.param);
    case DecayClass::Kind::Custom:
        break;
    }
    throw InputError("custom coefficient sequence has no continuation rule");
}

} // namespace gsinc
