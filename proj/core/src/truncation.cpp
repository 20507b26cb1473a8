#include "gsinc/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {
constexpr double pi = std::numbers::pi;
}

IndexInterval adaptive_index_set(double t, int depth) {
    if (depth < 1)
        throw InputError("truncation depth must be at least 1");
    double r = t / pi;
    const double nearest = std::round(r);
    if (std::abs(r - nearest) < 1e-9)
        r = nearest;
    IndexInterval iv;
    iv.lo = static_cast<long>(std::ceil(r - static_cast<double>(depth)));
    iv.hi = static_cast<long>(std::floor(r + static_cast<double>(depth)));
    return iv;
}

double partial_sum(const SampledSignal& sig, double t, int depth) {
    const IndexInterval iv = adaptive_index_set(t, depth);
    const long lo = std::max(iv.lo, sig.n_min());
    const long hi = std::min(iv.hi, sig.n_max());
    double acc = 0.0;
    for (long n = lo; n <= hi; ++n) {
        const double f = sig.sample(n);
        if (f == 0.0)
            continue;
        acc += f * sig.kernel().eval(t - static_cast<double>(n) * pi);
    }
    return acc;
}

double truncation_bound(const SampledSignal& sig, int depth) {
    if (depth < 1)
        throw InputError("truncation depth must be at least 1");
    const double n = static_cast<double>(depth);
    const double shape = std::sqrt((8.0 / (pi * pi * pi)) * (1.0 / (n * n) + 1.0 / n));
    const GeneralizedSinc& k = sig.kernel();
    return (k.l1_norm() / k.l2_norm()) * sig.l2_norm() * shape;
}

TruncationStudy run_truncation_study(const SampledSignal& sig,
                                     std::span<const int> depths,
                                     double grid_step) {
    if (depths.empty())
        throw InputError("truncation study needs at least one depth");
    for (std::size_t i = 0; i < depths.size(); ++i) {
        if (depths[i] < 1)
            throw InputError("truncation depths must be at least 1");
        if (i > 0 && depths[i] <= depths[i - 1])
            throw InputError("truncation depths must be strictly increasing");
    }
    if (!(grid_step > 0.0))
        throw InputError("grid step must be positive");

    const int max_depth = depths.back();
    const double lo_all =
        (static_cast<double>(sig.n_min()) - 4.0 * max_depth) * pi;
    const double hi_all =
        (static_cast<double>(sig.n_max()) + 4.0 * max_depth) * pi;
    const long count =
        static_cast<long>(std::floor((hi_all - lo_all) / grid_step + 1e-9)) + 1;
    if (count > 50'000'000)
        throw InputError("truncation grid would be unreasonably large");

    // The full reconstruction is the expensive factor and does not depend on
    // the depth, so it is tabulated once on the widest grid; each depth then
    // reads the slice covering its own margin.
    std::vector<double> ts(static_cast<std::size_t>(count));
    std::vector<double> recon(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        ts[static_cast<std::size_t>(i)] = lo_all + grid_step * static_cast<double>(i);
        recon[static_cast<std::size_t>(i)] =
            sig.reconstruct(ts[static_cast<std::size_t>(i)]);
    }

    TruncationStudy study;
    study.depths.assign(depths.begin(), depths.end());
    for (int depth : depths) {
        const double lo_n =
            (static_cast<double>(sig.n_min()) - 4.0 * depth) * pi - 1e-9;
        const double hi_n =
            (static_cast<double>(sig.n_max()) + 4.0 * depth) * pi + 1e-9;
        double worst = 0.0;
        double worst_at = ts.front();
        for (long i = 0; i < count; ++i) {
            const double t = ts[static_cast<std::size_t>(i)];
            if (t < lo_n || t > hi_n)
                continue;
            const double err =
                std::abs(recon[static_cast<std::size_t>(i)] - partial_sum(sig, t, depth));
            if (err > worst) {
                worst = err;
                worst_at = t;
            }
        }
        study.sup_error.push_back(worst);
        study.sup_error_at.push_back(worst_at);
        study.bound.push_back(truncation_bound(sig, depth));
    }

    // Least-squares slope of log(bound) vs log(depth), over the asymptotic
    // depths when enough of them are present.
    std::vector<std::size_t> fit_idx;
    for (std::size_t i = 0; i < study.depths.size(); ++i)
        if (study.depths[i] >= 8)
            fit_idx.push_back(i);
    if (fit_idx.size() < 3) {
        fit_idx.resize(study.depths.size());
        for (std::size_t i = 0; i < fit_idx.size(); ++i)
            fit_idx[i] = i;
    }
    bool fittable = fit_idx.size() >= 2;
    for (std::size_t i : fit_idx)
        fittable = fittable && study.bound[i] > 0.0;
    if (fittable) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t i : fit_idx) {
            const double x = std::log(static_cast<double>(study.depths[i]));
            const double y = std::log(study.bound[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(fit_idx.size());
        study.bound_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return study;
}

} // namespace gsinc
