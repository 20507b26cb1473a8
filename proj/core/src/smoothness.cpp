#include "gsinc/smoothness.hpp"

#include <cmath>
#include <limits>

#include "gsinc/errors.hpp"

namespace gsinc {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Converges:
        return "converges";
    case Verdict::Diverges:
        return "diverges";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

double series_partial(const CoeffSeq& coeffs, double s, std::size_t n_terms) {
    if (n_terms == 0)
        throw InputError("series partial sum needs at least one term");
    if (!coeffs.can_extend() && n_terms > coeffs.size())
        throw InputError("custom coefficient sequence cannot be extended to "
                         "the requested length");
    double acc = 0.0;
    for (std::size_t n = 0; n < n_terms; ++n) {
        const double c = coeffs.coeff_extended(n);
        if (c == 0.0)
            continue;
        double term;
        if (n == 0) {
            term = s == 0.0 ? c * c : 0.0;
        } else if (s == 0.0) {
            term = c * c;
        } else {
            // b_n^2 n^{2s} through logarithms: the factors alone can
            // underflow or overflow while the product is still ordinary, so
            // combining exponents first keeps every representable term, and
            // genuinely huge ones saturate to infinity.
            const double lg = 2.0 * std::log(std::abs(c)) +
                              2.0 * s * std::log(static_cast<double>(n));
            if (lg > 709.0)
                return std::numeric_limits<double>::infinity();
            term = lg < -745.0 ? 0.0 : std::exp(lg);
        }
        acc += term;
    }
    return acc;
}

Verdict classify(const CoeffSeq& coeffs, double s) {
    switch (coeffs.decay().kind) {
    case DecayClass::Kind::Finite:
    case DecayClass::Kind::Geometric:
        return Verdict::Converges;
    case DecayClass::Kind::PowerLaw:
        // Terms behave like n^{2s - 2p}; the boundary s = p - 1/2 gives the
        // harmonic series and diverges with it.
        return s < coeffs.decay().param - 0.5 ? Verdict::Converges
                                              : Verdict::Diverges;
    case DecayClass::Kind::Custom:
        break;
    }
    return heuristic_classify(coeffs, s);
}

Verdict heuristic_classify(const CoeffSeq& coeffs, double s,
                           std::size_t n_terms) {
    std::size_t n1 = n_terms;
    if (!coeffs.can_extend())
        n1 = coeffs.size() / 2;
    if (n1 == 0)
        return Verdict::Inconclusive;
    const double p1 = series_partial(coeffs, s, n1);
    const double p2 = series_partial(coeffs, s, 2 * n1);
    if (!std::isfinite(p1) || !std::isfinite(p2))
        return Verdict::Inconclusive;
    if (p2 == p1)
        return Verdict::Converges;
    if (p1 == 0.0)
        return Verdict::Inconclusive;
    const double ratio = p2 / p1;
    if (ratio > 1.5)
        return Verdict::Diverges;
    if (ratio < 1.01)
        return Verdict::Converges;
    return Verdict::Inconclusive;
}

double nu2_lower_bound(const CoeffSeq& coeffs) {
    switch (coeffs.decay().kind) {
    case DecayClass::Kind::Finite:
    case DecayClass::Kind::Geometric:
        return std::numeric_limits<double>::infinity();
    case DecayClass::Kind::PowerLaw:
        return coeffs.decay().param - 0.5;
    case DecayClass::Kind::Custom:
        break;
    }
    throw InputError("no analytic smoothness floor for a custom sequence");
}

SmoothnessReport run_smoothness_study(const CoeffSeq& coeffs,
                                      std::span<const double> s_values,
                                      std::size_t n_terms) {
    if (s_values.empty())
        throw InputError("smoothness study needs at least one order");
    std::size_t n1 = n_terms;
    if (!coeffs.can_extend())
        n1 = coeffs.size() / 2;
    if (n1 == 0)
        throw InputError("coefficient sequence too short for a smoothness study");

    SmoothnessReport report;
    report.s_values.assign(s_values.begin(), s_values.end());
    for (double s : s_values) {
        report.partial_n.push_back(series_partial(coeffs, s, n1));
        report.partial_2n.push_back(series_partial(coeffs, s, 2 * n1));
        report.verdicts.push_back(classify(coeffs, s));
    }
    if (coeffs.decay().kind != DecayClass::Kind::Custom) {
        report.nu2 = nu2_lower_bound(coeffs);
        report.nu2_known = true;
    }
    return report;
}

} // namespace gsinc
