#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gsinc/sampling.hpp"

namespace gsinc {

enum class NoiseDistribution { Gaussian, UniformCentered };

/// Zero-mean sample noise with standard deviation sigma, drawn from a
/// counter-based generator: the value for (trial, index) is a pure function
/// of (seed, trial, index), so any evaluation order and any parallel
/// schedule produce identical streams.
///
/// Gaussian uses a Box-Muller pair; UniformCentered is uniform on
/// [-sigma sqrt(3), sigma sqrt(3)].
struct NoiseModel {
    double sigma = 0.0;
    NoiseDistribution dist = NoiseDistribution::Gaussian;
    std::uint64_t seed = 0;

    double draw(std::uint64_t trial, long index) const;
};

/// Reconstruction from corrupted samples f(n pi) + eps_{trial,n}, noise
/// applied to every sample inside the window.
double noisy_reconstruct(const SampledSignal& sig, const NoiseModel& noise,
                         double t, std::uint64_t trial);

/// Uniform certified bound on the reconstruction-error variance:
///   var[f(t) - f_noisy(t)] <= 2 sigma^2 l1^2 (1 + 8/pi^2)   for all t.
double variance_bound(const GeneralizedSinc& kernel, double sigma);

/// sum over n in [win_lo, win_hi] of sinc_b(t - n pi)^2, plus a certified
/// bound on the remaining sum over all other integers n.
CertifiedValue sinc_sq_shift_sum(const GeneralizedSinc& kernel, double t,
                                 long win_lo, long win_hi);

/// Monte Carlo summary of the reconstruction error at each grid point.
struct NoiseStudy {
    std::vector<double> t_grid;
    std::vector<double> mean_err;  // empirical mean of f - f_noisy
    std::vector<double> var_err;   // unbiased empirical variance
    std::vector<double> exact_var; // sigma^2 sum_{n in window} sinc_b(t - n pi)^2
    std::vector<double> bound;     // variance_bound (same value at every t)
    std::vector<double> mean_band; // 4 sqrt(exact_var / trials)
    std::size_t trials = 0;
};

/// Runs `trials` independent noisy reconstructions at every grid point.
/// Requires trials >= 1000.  Grid points are distributed across `threads`
/// workers; per point, trials are always accumulated serially in trial
/// order, so results are identical for every thread count.
NoiseStudy run_noise_study(const SampledSignal& sig, const NoiseModel& noise,
                           std::size_t trials, std::span<const double> t_grid,
                           int threads = 1);

} // namespace gsinc
