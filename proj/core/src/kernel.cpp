#include "gsinc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {
constexpr double pi = std::numbers::pi;
}

double sinc(double x) {
    const double a = std::abs(x);
    if (a < 1e-4) {
        // 1 - x^2/6 + x^4/120 - x^6/5040; next term is ~1e-36 here.
        const double x2 = x * x;
        return 1.0 + x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (-1.0 / 5040.0)));
    }
    return std::sin(x) / x;
}

CascadeFilter::CascadeFilter(CoeffSeq coeffs) : coeffs_(std::move(coeffs)) {}

double CascadeFilter::eval(double xi) const {
    const double a = std::abs(xi);
    // The negated comparison also routes NaN to the stopband.
    if (!(a < static_cast<double>(coeffs_.size())))
        return 0.0;
    return coeffs_[static_cast<std::size_t>(a)];
}

GeneralizedSinc::GeneralizedSinc(CoeffSeq coeffs) : coeffs_(std::move(coeffs)) {}

double GeneralizedSinc::eval(double t) const {
    const auto b = coeffs_.coeffs();
    const std::complex<double> z = std::polar(1.0, t);
    std::complex<double> f{0.0, 0.0};
    for (std::size_t i = b.size(); i-- > 0;)
        f = f * z + b[i];
    const std::complex<double> half = std::polar(1.0, 0.5 * t);
    return sinc(0.5 * t) * (f * half).real();
}

double GeneralizedSinc::eval_spectral(double t) const {
    const auto b = coeffs_.coeffs();
    double acc = 0.0;
    if (std::abs(t) < 1e-4) {
        // (sin((n+1)t) - sin(nt))/t by its Taylor series in t^2; the direct
        // difference loses too many digits this close to 0.
        const double t2 = t * t;
        for (std::size_t n = 0; n < b.size(); ++n) {
            if (b[n] == 0.0)
                continue;
            const double hi = static_cast<double>(n + 1);
            const double lo = static_cast<double>(n);
            double term = 0.0;
            double tpow = 1.0;      // t^{2k}
            double factorial = 1.0; // (2k+1)!
            double sign = 1.0;
            for (int k = 0; k <= 6; ++k) {
                const double c = std::pow(hi, 2 * k + 1) - std::pow(lo, 2 * k + 1);
                term += sign * tpow * c / factorial;
                tpow *= t2;
                factorial *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
                sign = -sign;
            }
            acc += b[n] * term;
        }
        return acc;
    }
    for (std::size_t n = 0; n < b.size(); ++n) {
        if (b[n] == 0.0)
            continue;
        const double hi = static_cast<double>(n + 1);
        const double lo = static_cast<double>(n);
        acc += b[n] * (std::sin(hi * t) - std::sin(lo * t)) / t;
    }
    return acc;
}

double GeneralizedSinc::decay_envelope(double t) const {
    return 4.0 * coeffs_.l1_norm() / (2.0 + std::abs(t));
}

QuadratureSpec::QuadratureSpec()
    : half_width(400.0 * pi), step(pi / 64.0), tolerance(1e-2) {}

namespace {

// Analytic bound on the shifted self-product integral outside [-T, T+s*pi],
// from the |t| >= 2 envelope 2 l1 / |t| on both factors.  Needs the nearer
// domain edge at least 2 away from the farther kernel center.
double shifted_tail_bound(double l1, double half_width, int shift) {
    const double margin = half_width - std::abs(shift) * pi;
    if (!(margin >= 2.0))
        throw ToleranceError("quadrature half-width too small for this shift");
    return 8.0 * l1 * l1 / margin;
}

} // namespace

QuadratureSpec quadrature_for_tolerance(const GeneralizedSinc& kernel,
                                        int max_abs_shift, double tolerance) {
    if (!(tolerance > 0.0))
        throw InputError("tolerance must be positive");
    const double l1 = kernel.l1_norm();
    const double shift_reach = std::abs(max_abs_shift) * pi;
    // Tail <= tolerance/2 leaves the other half for discretization, which
    // for these band-limited integrands is far smaller still.
    double half_width =
        std::max(400.0 * pi, shift_reach + 16.0 * l1 * l1 / tolerance);
    half_width = std::ceil(half_width / pi) * pi;
    QuadratureSpec quad;
    quad.half_width = half_width;
    quad.tolerance = tolerance;
    return quad;
}

CertifiedValue inner_product_shifted(const GeneralizedSinc& kernel, int shift,
                                     const QuadratureSpec& quad) {
    const int shifts[1] = {shift};
    return inner_products_shifted(kernel, shifts, quad).front();
}

std::vector<CertifiedValue> inner_products_shifted(const GeneralizedSinc& kernel,
                                                   std::span<const int> shifts,
                                                   const QuadratureSpec& quad) {
    if (shifts.empty())
        return {};
    if (!(quad.step > 0.0) || !(quad.half_width > 0.0))
        throw InputError("quadrature step and half-width must be positive");

    const double l1 = kernel.l1_norm();
    for (int s : shifts) {
        const double tail = shifted_tail_bound(l1, quad.half_width, s);
        if (tail > quad.tolerance)
            throw ToleranceError("tail bound exceeds the requested tolerance; "
                                 "enlarge the quadrature half-width");
    }

    // Snap the step to an integer division of pi so every shift by a lattice
    // multiple is an exact table offset, and round the half-width up to a
    // multiple of pi for the same reason.
    long per_pi = std::lround(pi / quad.step);
    if (per_pi < 1)
        per_pi = 1;
    if (per_pi % 2 != 0)
        ++per_pi;
    const double step = pi / static_cast<double>(per_pi);
    const long half_count = static_cast<long>(std::ceil(quad.half_width / pi - 1e-9));

    int max_pos_shift = 0;
    for (int s : shifts)
        max_pos_shift = std::max(max_pos_shift, s);

    // One kernel table covers every integrand position: the integration
    // range [-T, T + s*pi] needs the first factor there and the second on
    // the mirrored range, all inside [-T - S*pi, T + S*pi], S = max shift.
    const long lo_idx = -(half_count + max_pos_shift) * per_pi;
    const long hi_idx = (half_count + max_pos_shift) * per_pi;
    std::vector<double> table(static_cast<std::size_t>(hi_idx - lo_idx) + 1);
    for (long i = lo_idx; i <= hi_idx; ++i)
        table[static_cast<std::size_t>(i - lo_idx)] =
            kernel.eval(static_cast<double>(i) * step);

    std::vector<CertifiedValue> out;
    out.reserve(shifts.size());
    for (int s : shifts) {
        const long a = -half_count * per_pi;
        const long b = (half_count + s) * per_pi;
        const long offset = static_cast<long>(s) * per_pi;
        // Composite Simpson over [a, b]; the subinterval count is even
        // because per_pi is.
        double acc = 0.0;
        for (long i = a; i <= b; ++i) {
            const double f = table[static_cast<std::size_t>(i - lo_idx)] *
                             table[static_cast<std::size_t>(i - offset - lo_idx)];
            double w = 4.0;
            if (i == a || i == b)
                w = 1.0;
            else if ((i - a) % 2 == 0)
                w = 2.0;
            acc += w * f;
        }
        CertifiedValue cv;
        cv.value = acc * step / 3.0;
        cv.tail_bound = shifted_tail_bound(
            l1, static_cast<double>(half_count) * pi, s);
        out.push_back(cv);
    }
    return out;
}

} // namespace gsinc
