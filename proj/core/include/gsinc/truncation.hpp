#pragma once

#include <span>
#include <vector>

#include "gsinc/sampling.hpp"

namespace gsinc {

/// Inclusive integer interval; empty when lo > hi.
struct IndexInterval {
    long lo = 0;
    long hi = -1;

    bool contains(long n) const { return lo <= n && n <= hi; }
    long count() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// Indices kept by the depth-n partial sum around t:
///   J_n(t) = [ceil(t/pi - n), floor(t/pi + n)].
/// t/pi is snapped to the nearest integer when within 1e-9 of it, so window
/// membership does not flicker across floating-point representations of
/// lattice points.  Requires depth >= 1; |J| is always 2n or 2n+1.
IndexInterval adaptive_index_set(double t, int depth);

/// Reconstruction restricted to J_depth(t) (intersected with the sample
/// window).
double partial_sum(const SampledSignal& sig, double t, int depth);

/// Uniform certified bound on |f(t) - partial_sum(sig, t, depth)|:
///   (l1/l2) ||f||_L2 sqrt((8/pi^3) (1/n^2 + 1/n)),   n = depth,
/// with ||f||_L2 taken from the sample-side energy identity.
double truncation_bound(const SampledSignal& sig, int depth);

/// One row per depth: measured worst-case truncation error over a t-grid
/// against the certified bound.
struct TruncationStudy {
    std::vector<int> depths;
    std::vector<double> sup_error;    // max_t |f(t) - S_n f(t)|
    std::vector<double> sup_error_at; // arg max t
    std::vector<double> bound;        // truncation_bound at that depth
    double bound_slope = 0.0;         // see run_truncation_study
};

/// Evaluates the truncation error for every requested depth on a uniform
/// grid of the given step covering the sample window plus a 4*depth*pi
/// margin on each side.  Depths must be >= 1 and strictly increasing.
///
/// bound_slope is the least-squares slope of log(bound) against log(depth),
/// fitted over depths >= 8 when at least three such depths are present
/// (otherwise over all depths); the bound decays like n^{-1/2} for large n,
/// so the slope settles near -0.5 once 1/n^2 stops contributing.
TruncationStudy run_truncation_study(const SampledSignal& sig,
                                     std::span<const int> depths,
                                     double grid_step);

} // namespace gsinc
