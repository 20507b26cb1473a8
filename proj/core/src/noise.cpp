#include "gsinc/noise.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <thread>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {

constexpr double pi = std::numbers::pi;

// SplitMix64 finalizer.  Composing it over (seed, trial, index) gives an
// independent 64-bit value per counter triple with no sequential state, so
// draws can be generated in any order.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform in (0, 1]; never 0, so it is safe inside a logarithm.
double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
}

} // namespace

double NoiseModel::draw(std::uint64_t trial, long index) const {
    const std::uint64_t key =
        mix64(mix64(mix64(seed) ^ trial) ^
              static_cast<std::uint64_t>(static_cast<std::int64_t>(index)));
    const double u1 = to_unit(mix64(key ^ 0x243F6A8885A308D3ull));
    const double u2 = to_unit(mix64(key ^ 0x13198A2E03707344ull));
    switch (dist) {
    case NoiseDistribution::Gaussian:
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
    case NoiseDistribution::UniformCentered:
        return sigma * std::sqrt(3.0) * (2.0 * u1 - 1.0);
    }
    return 0.0;
}

double noisy_reconstruct(const SampledSignal& sig, const NoiseModel& noise,
                         double t, std::uint64_t trial) {
    double acc = 0.0;
    for (long n = sig.n_min(); n <= sig.n_max(); ++n) {
        const double f = sig.sample(n) + noise.draw(trial, n);
        acc += f * sig.kernel().eval(t - static_cast<double>(n) * pi);
    }
    return acc;
}

double variance_bound(const GeneralizedSinc& kernel, double sigma) {
    const double l1 = kernel.l1_norm();
    return 2.0 * sigma * sigma * l1 * l1 * (1.0 + 8.0 / (pi * pi));
}

CertifiedValue sinc_sq_shift_sum(const GeneralizedSinc& kernel, double t,
                                 long win_lo, long win_hi) {
    if (win_lo > win_hi)
        throw InputError("shift-sum window is empty");
    CertifiedValue cv;
    for (long n = win_lo; n <= win_hi; ++n) {
        const double v = kernel.eval(t - static_cast<double>(n) * pi);
        cv.value += v * v;
    }

    // Tail over each unbounded side, from the global envelope
    // |sinc_b| <= 4 l1 / (2 + dist): indices still near t (possible when t
    // lies outside the window) contribute at most (2 l1)^2 apiece, the rest
    // form a lattice marching away whose squared envelopes are summable.
    const double l1 = kernel.l1_norm();
    const double sup_sq = 4.0 * l1 * l1;
    const auto one_side_tail = [&](bool right) {
        const long first = right ? win_hi + 1 : win_lo - 1;
        // First excluded index at or past t, walking away from the window.
        double k0 = right ? std::ceil(t / pi) : std::floor(t / pi);
        if (right)
            k0 = std::max(k0, static_cast<double>(first));
        else
            k0 = std::min(k0, static_cast<double>(first));
        const double near_count = std::abs(k0 - static_cast<double>(first));
        const double delta =
            right ? k0 * pi - t : t - k0 * pi; // >= 0 by choice of k0
        const double d = 2.0 + std::max(delta, 0.0);
        return near_count * sup_sq +
               4.0 * sup_sq * (1.0 / (d * d) + 1.0 / (pi * d));
    };
    cv.tail_bound = one_side_tail(true) + one_side_tail(false);
    return cv;
}

NoiseStudy run_noise_study(const SampledSignal& sig, const NoiseModel& noise,
                           std::size_t trials, std::span<const double> t_grid,
                           int threads) {
    if (trials < 1000)
        throw InputError("noise study needs at least 1000 trials");
    if (t_grid.empty())
        throw InputError("noise study needs a nonempty grid");

    const std::size_t npts = t_grid.size();
    NoiseStudy study;
    study.t_grid.assign(t_grid.begin(), t_grid.end());
    study.mean_err.assign(npts, 0.0);
    study.var_err.assign(npts, 0.0);
    study.exact_var.assign(npts, 0.0);
    study.bound.assign(npts, variance_bound(sig.kernel(), noise.sigma));
    study.mean_band.assign(npts, 0.0);
    study.trials = trials;

    const long win_lo = sig.n_min();
    const long win_hi = sig.n_max();
    const std::size_t win = static_cast<std::size_t>(win_hi - win_lo) + 1;

    const auto run_point = [&](std::size_t i) {
        const double t = t_grid[i];
        std::vector<double> row(win);
        double sq = 0.0;
        for (std::size_t j = 0; j < win; ++j) {
            row[j] = sig.kernel().eval(
                t - static_cast<double>(win_lo + static_cast<long>(j)) * pi);
            sq += row[j] * row[j];
        }
        // Trials always accumulate serially and in order, so the result is
        // independent of how grid points are assigned to threads.
        double mean = 0.0;
        double m2 = 0.0;
        for (std::size_t m = 0; m < trials; ++m) {
            double err = 0.0;
            for (std::size_t j = 0; j < win; ++j)
                err -= noise.draw(m, win_lo + static_cast<long>(j)) * row[j];
            const double delta = err - mean;
            mean += delta / static_cast<double>(m + 1);
            m2 += delta * (err - mean);
        }
        study.mean_err[i] = mean;
        study.var_err[i] = m2 / static_cast<double>(trials - 1);
        study.exact_var[i] = noise.sigma * noise.sigma * sq;
        study.mean_band[i] =
            4.0 * std::sqrt(study.exact_var[i] / static_cast<double>(trials));
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < npts; ++i)
            run_point(i);
        return study;
    }

    const std::size_t nworkers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), npts);
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < npts; i += nworkers)
                run_point(i);
        });
    }
    for (auto& th : pool)
        th.join();
    return study;
}

} // namespace gsinc
