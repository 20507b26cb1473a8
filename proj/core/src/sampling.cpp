#include "gsinc/sampling.hpp"

#include <cmath>
#include <numbers>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {
constexpr double pi = std::numbers::pi;

std::map<long, double> to_map(long n_min, const std::vector<double>& samples) {
    std::map<long, double> m;
    for (std::size_t i = 0; i < samples.size(); ++i)
        m[n_min + static_cast<long>(i)] = samples[i];
    return m;
}
} // namespace

SampledSignal::SampledSignal(GeneralizedSinc kernel, std::map<long, double> samples)
    : kernel_(std::move(kernel)), filter_(kernel_.coeffs()) {
    if (samples.empty())
        throw InputError("sampled signal needs at least one sample");
    const double unit_gap = std::abs(kernel_.sum() - 1.0);
    if (unit_gap > kernel_.coeffs().l1_tail_bound() + 1e-8)
        throw InputError("interpolation requires the kernel coefficients to "
                         "sum to 1 within the tail allowance");
    n_min_ = samples.begin()->first;
    const long n_max = samples.rbegin()->first;
    samples_.assign(static_cast<std::size_t>(n_max - n_min_) + 1, 0.0);
    for (const auto& [n, v] : samples) {
        if (!std::isfinite(v))
            throw InputError("sample values must be finite");
        samples_[static_cast<std::size_t>(n - n_min_)] = v;
    }
    for (double v : samples_)
        sample_sq_sum_ += v * v;
}

SampledSignal::SampledSignal(GeneralizedSinc kernel, long n_min,
                             std::vector<double> samples)
    : SampledSignal(std::move(kernel), to_map(n_min, samples)) {}

double SampledSignal::sample(long n) const {
    if (n < n_min_ || n > n_max())
        return 0.0;
    return samples_[static_cast<std::size_t>(n - n_min_)];
}

double SampledSignal::reconstruct(double t) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const double f = samples_[i];
        if (f == 0.0)
            continue;
        const double center = static_cast<double>(n_min_ + static_cast<long>(i)) * pi;
        acc += f * kernel_.eval(t - center);
    }
    return acc;
}

std::complex<double> SampledSignal::spectrum(double xi) const {
    const double h = filter_.eval(xi);
    if (h == 0.0)
        return {0.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    const std::complex<double> w = std::polar(1.0, -pi * xi);
    std::complex<double> z = std::polar(1.0, -pi * xi * static_cast<double>(n_min_));
    for (double f : samples_) {
        acc += f * z;
        z *= w;
    }
    return std::sqrt(pi / 2.0) * acc * h;
}

double SampledSignal::l2_norm() const {
    return kernel_.l2_norm() * std::sqrt(pi * sample_sq_sum_);
}

QuadratureSpec parseval_quadrature_for_tolerance(const SampledSignal& sig,
                                                 double tolerance) {
    if (!(tolerance > 0.0))
        throw InputError("tolerance must be positive");
    const double l1 = sig.kernel().l1_norm();
    double s1 = 0.0;
    for (double f : sig.samples())
        s1 += std::abs(f);
    double margin = 2.0 * pi;
    if (s1 > 0.0)
        margin = std::max(margin, 16.0 * l1 * l1 * s1 * s1 / tolerance);
    margin = std::ceil(margin / pi) * pi;
    QuadratureSpec quad;
    quad.half_width = margin;
    quad.tolerance = tolerance;
    return quad;
}

ParsevalResult parseval_check(const SampledSignal& sig, const QuadratureSpec& quad) {
    if (!(quad.step > 0.0))
        throw InputError("quadrature step must be positive");
    const double margin = quad.half_width;
    if (!(margin >= 2.0))
        throw ToleranceError("quadrature margin too small to certify a tail");

    const double l1 = sig.kernel().l1_norm();
    double s1 = 0.0;
    for (double f : sig.samples())
        s1 += std::abs(f);
    // Outside the enlarged window every kernel center is at least `margin`
    // away, so |f(t)| <= 2 l1 s1 / dist and each side integrates to at most
    // 4 l1^2 s1^2 / margin.
    const double tail = 8.0 * l1 * l1 * s1 * s1 / margin;
    if (tail > quad.tolerance)
        throw ToleranceError("tail bound exceeds the requested tolerance; "
                             "enlarge the quadrature margin");

    const double a = static_cast<double>(sig.n_min()) * pi - margin;
    const double b = static_cast<double>(sig.n_max()) * pi + margin;
    long m = static_cast<long>(std::ceil((b - a) / quad.step));
    if (m < 2)
        m = 2;
    if (m % 2 != 0)
        ++m;
    const double h = (b - a) / static_cast<double>(m);

    double acc = 0.0;
    for (long i = 0; i <= m; ++i) {
        const double t = a + h * static_cast<double>(i);
        const double v = sig.reconstruct(t);
        double w = 4.0;
        if (i == 0 || i == m)
            w = 1.0;
        else if (i % 2 == 0)
            w = 2.0;
        acc += w * v * v;
    }

    ParsevalResult r;
    r.lhs = acc * h / 3.0;
    r.rhs = pi * sig.kernel().l2_norm() * sig.kernel().l2_norm() *
            sig.sample_sq_sum();
    r.tail_bound = tail;
    return r;
}

} // namespace gsinc
