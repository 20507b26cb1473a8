#include "gsinc/generators.hpp"

#include <cmath>
#include <numbers>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {

constexpr double disk_slack = 1e-12;

void require_in_disk(std::complex<double> z) {
    if (!(std::abs(z) <= 1.0 + disk_slack))
        throw InputError("evaluation point lies outside the closed unit disk");
}

} // namespace

AnalyticGenerator::AnalyticGenerator(CoeffSeq coeffs, bool require_unit_sum)
    : coeffs_(std::move(coeffs)), unit_sum_(require_unit_sum) {
    if (require_unit_sum) {
        const double gap = std::abs(coeffs_.sum() - 1.0);
        if (gap > coeffs_.l1_tail_bound() + 1e-8)
            throw InputError("coefficient sum is not 1 within the tail allowance");
    }
}

std::complex<double> AnalyticGenerator::eval(std::complex<double> z) const {
    require_in_disk(z);
    const auto b = coeffs_.coeffs();
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = b.size(); i-- > 0;)
        acc = acc * z + b[i];
    return acc;
}

BlaschkeGenerator::BlaschkeGenerator(std::vector<double> params)
    : params_(std::move(params)) {
    if (params_.empty())
        throw InputError("Blaschke product needs at least one parameter");
    for (double a : params_) {
        if (!(std::abs(a) < 1.0))
            throw InputError("Blaschke parameters must satisfy |a| < 1");
    }
}

std::complex<double> BlaschkeGenerator::eval(std::complex<double> z) const {
    require_in_disk(z);
    std::complex<double> acc{1.0, 0.0};
    for (double a : params_)
        acc *= (z - a) / (1.0 - a * z);
    return acc;
}

double BlaschkeGenerator::derivative_at_one() const {
    double acc = 0.0;
    for (double a : params_)
        acc += (1.0 + a) / (1.0 - a);
    return acc;
}

AnalyticGenerator BlaschkeGenerator::to_series(std::size_t n_terms) const {
    if (n_terms == 0 || n_terms > max_series_terms)
        throw InputError("requested series length is out of range");

    // Taylor coefficients of G by trapezoidal quadrature on |z| = r.  The
    // rule is exact for every power of z below the transform length m, so
    // the only error in g_k is the fold-in of powers >= m, each damped by
    // r^m and inflated by r^{-k}; with r = 0.9 and m >= 4096 that is far
    // below roundoff.  Accumulation in long double keeps the r^{-k}
    // amplification of rounding noise harmless out to k ~ 1000.
    const double r = 0.9;
    std::size_t m = 4096;
    while (m < 8 * n_terms)
        m *= 2;

    std::vector<std::complex<double>> on_circle(m);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t j = 0; j < m; ++j) {
        const double theta = two_pi * static_cast<double>(j) / static_cast<double>(m);
        on_circle[j] = eval(std::polar(r, theta));
    }

    std::vector<double> g(n_terms);
    for (std::size_t k = 0; k < n_terms; ++k) {
        long double re = 0.0L;
        for (std::size_t j = 0; j < m; ++j) {
            const double theta = two_pi * static_cast<double>(j) / static_cast<double>(m);
            const double angle = theta * static_cast<double>(k);
            re += static_cast<long double>(on_circle[j].real()) * std::cos(angle) +
                  static_cast<long double>(on_circle[j].imag()) * std::sin(angle);
        }
        g[k] = static_cast<double>(re / static_cast<long double>(m) /
                                   std::pow(static_cast<long double>(r),
                                            static_cast<long double>(k)));
    }

    // F(z) = (G(z) - 1)/(z - 1) has b_n = 1 - (g_0 + ... + g_n), using
    // G(1) = 1 (product of factors (1 - a)/(1 - a)).
    std::vector<double> b(n_terms);
    long double csum = 0.0L;
    for (std::size_t n = 0; n < n_terms; ++n) {
        csum += static_cast<long double>(g[n]);
        b[n] = static_cast<double>(1.0L - csum);
    }

    if (!(std::abs(b.back()) < 1e-12))
        throw ToleranceError("series length too short: trailing coefficient "
                             "has not decayed below 1e-12");

    // The dropped tail decays geometrically at the largest parameter
    // magnitude (poles of G sit at 1/a_j), which prices its norms.
    double q = 0.0;
    for (double a : params_)
        q = std::max(q, std::abs(a));
    const double last = std::abs(b.back());
    const DecayClass decay = DecayClass::custom(
        last * q / (1.0 - q), last * q / std::sqrt(1.0 - q * q));

    return AnalyticGenerator(CoeffSeq(std::move(b), decay),
                             /*require_unit_sum=*/false);
}

double BlaschkeGenerator::boundary_kernel(double t) const {
    const auto phi = [this](double u) {
        return eval(std::polar(1.0, u)).imag() / u;
    };
    if (t != 0.0)
        return phi(t);
    // phi is even with a smooth h^2 expansion, so two Richardson stages on
    // halved offsets give the limit to roundoff.
    const double h = 1e-3;
    const double a1 = phi(h);
    const double a2 = phi(h / 2.0);
    const double a3 = phi(h / 4.0);
    const double b1 = (4.0 * a2 - a1) / 3.0;
    const double b2 = (4.0 * a3 - a2) / 3.0;
    return (16.0 * b2 - b1) / 15.0;
}

} // namespace gsinc
