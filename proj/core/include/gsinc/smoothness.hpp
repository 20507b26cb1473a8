#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gsinc/coeff_seq.hpp"

namespace gsinc {

/// Convergence verdict for the weighted coefficient series
///   P(s) = sum_n b_n^2 n^{2s},
/// which is finite exactly when the reconstruction has Sobolev order s.
enum class Verdict { Converges, Diverges, Inconclusive };

std::string to_string(Verdict v);

/// Partial sum of P(s) over n = 0..n_terms-1, using the decay-class
/// continuation past the stored prefix.  The n = 0 term is b_0^2 for s = 0
/// and 0 otherwise.  Throws InputError when the sequence cannot be extended
/// to the requested length.
double series_partial(const CoeffSeq& coeffs, double s, std::size_t n_terms);

/// Analytic classification from the decay class:
///   finite or geometric -> Converges for every s,
///   power law p         -> Converges iff s < p - 1/2,
///   custom              -> falls back to the partial-sum heuristic.
Verdict classify(const CoeffSeq& coeffs, double s);

/// Ratio test on partial sums: compares P at n_terms and 2*n_terms and
/// declares Diverges when the ratio exceeds 1.5, Converges when it is below
/// 1.01, Inconclusive otherwise.  For custom sequences the two lengths are
/// size()/2 and size().
Verdict heuristic_classify(const CoeffSeq& coeffs, double s,
                           std::size_t n_terms = 10000);

/// Largest s below which convergence is guaranteed by the decay class:
/// infinity for finite and geometric sequences, p - 1/2 for power law.
/// Throws InputError for custom sequences.
double nu2_lower_bound(const CoeffSeq& coeffs);

struct SmoothnessReport {
    std::vector<double> s_values;
    std::vector<double> partial_n;  // P(s) at n_terms
    std::vector<double> partial_2n; // P(s) at 2*n_terms
    std::vector<Verdict> verdicts;  // classify() per s
    double nu2 = 0.0;               // nu2_lower_bound, infinity allowed
    bool nu2_known = false;         // false for custom sequences
};

SmoothnessReport run_smoothness_study(const CoeffSeq& coeffs,
                                      std::span<const double> s_values,
                                      std::size_t n_terms = 10000);

} // namespace gsinc
