#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "gsinc/coeff_seq.hpp"
#include "gsinc/errors.hpp"
#include "gsinc/smoothness.hpp"

using gsinc::CoeffSeq;
using gsinc::DecayClass;
using gsinc::Verdict;

namespace {

// (1 - a) a^n with the matching geometric decay class, so the continuation
// past the stored prefix follows the same profile.
CoeffSeq geometric_profile(double a, std::size_t stored) {
    std::vector<double> b(stored);
    for (std::size_t n = 0; n < stored; ++n)
        b[n] = (1.0 - a) * std::pow(a, static_cast<double>(n));
    return CoeffSeq(std::move(b), DecayClass::geometric(a));
}

// (n + 1)^{-p} with the matching power-law decay class.
CoeffSeq power_profile(double p, std::size_t stored) {
    std::vector<double> b(stored);
    for (std::size_t n = 0; n < stored; ++n)
        b[n] = std::pow(static_cast<double>(n + 1), -p);
    return CoeffSeq(std::move(b), DecayClass::power_law(p));
}

} // namespace

TEST_CASE("order-zero partial sums reduce to sums of squares") {
    const CoeffSeq b({0.6, 0.3, 0.1}, DecayClass::finite());
    const double want = 0.6 * 0.6 + 0.3 * 0.3 + 0.1 * 0.1;
    CHECK(gsinc::series_partial(b, 0.0, 3) == doctest::Approx(want).epsilon(1e-15));
    CHECK(gsinc::series_partial(b, 0.0, 50) ==
          doctest::Approx(want).epsilon(1e-15));
    // A single term keeps only the n = 0 contribution.
    CHECK(gsinc::series_partial(b, 0.0, 1) ==
          doctest::Approx(0.36).epsilon(1e-15));
}

TEST_CASE("the n = 0 term drops out for positive orders") {
    const CoeffSeq b({0.6, 0.3, 0.1}, DecayClass::finite());
    // Only n = 1 and n = 2 contribute: 0.09 * 1 + 0.01 * 16.
    CHECK(gsinc::series_partial(b, 2.0, 3) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(gsinc::series_partial(b, 2.0, 1) == 0.0);
}

TEST_CASE("geometric profile matches its closed form") {
    const auto b = geometric_profile(0.5, 32);
    // sum of squares: (1-a)^2 / (1-a^2) = (1-a)/(1+a) = 1/3.
    CHECK(gsinc::series_partial(b, 0.0, 10000) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    // order 1: (1-a)^2 q(1+q)/(1-q)^3 with q = a^2, which is 5/27 at a = 1/2.
    CHECK(gsinc::series_partial(b, 1.0, 10000) ==
          doctest::Approx(5.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("partial sums are nondecreasing in the term count") {
    const auto b = power_profile(3.0, 64);
    const double p1 = gsinc::series_partial(b, 2.5, 1000);
    const double p2 = gsinc::series_partial(b, 2.5, 2000);
    const double p4 = gsinc::series_partial(b, 2.5, 4000);
    CHECK(p1 > 0.0);
    CHECK(p1 <= p2);
    CHECK(p2 <= p4);
}

TEST_CASE("log-space evaluation agrees with the direct product in safe ranges") {
    const auto b = power_profile(3.0, 64);
    const double s = 1.0;
    double direct = 0.0;
    for (std::size_t n = 1; n < 1000; ++n) {
        const double c = b.coeff_extended(n);
        direct += c * c * std::pow(static_cast<double>(n), 2.0 * s);
    }
    CHECK(gsinc::series_partial(b, s, 1000) ==
          doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("huge weighted terms saturate to infinity instead of NaN") {
    const CoeffSeq b({1.0}, DecayClass::geometric(0.9));
    const double v = gsinc::series_partial(b, 100.0, 10000);
    CHECK(std::isinf(v));
    CHECK(!std::isnan(v));
    // A moderate order stays finite even though it peaks around 1e30.
    const double w = gsinc::series_partial(b, 10.0, 10000);
    CHECK(std::isfinite(w));
    CHECK(w > 1e29);
}

TEST_CASE("partial sum input validation") {
    const CoeffSeq fin({1.0}, DecayClass::finite());
    CHECK_THROWS_AS(gsinc::series_partial(fin, 1.0, 0), gsinc::InputError);
    const CoeffSeq cust({0.5, 0.2, 0.1, 0.05, 0.03, 0.02},
                        DecayClass::custom(0.1, 0.1));
    CHECK_THROWS_AS(gsinc::series_partial(cust, 1.0, 10), gsinc::InputError);
    CHECK(gsinc::series_partial(cust, 1.0, 6) > 0.0);
}

TEST_CASE("analytic classification by decay class") {
    const CoeffSeq fin({0.2, 0.8}, DecayClass::finite());
    CHECK(gsinc::classify(fin, 0.0) == Verdict::Converges);
    CHECK(gsinc::classify(fin, 50.0) == Verdict::Converges);

    const auto geo = geometric_profile(0.9, 16);
    CHECK(gsinc::classify(geo, 100.0) == Verdict::Converges);

    const auto pow3 = power_profile(3.0, 64);
    CHECK(gsinc::classify(pow3, 2.4) == Verdict::Converges);
    CHECK(gsinc::classify(pow3, 2.5) == Verdict::Diverges);
    CHECK(gsinc::classify(pow3, 2.6) == Verdict::Diverges);
}

TEST_CASE("ratio heuristic matches the analytic verdicts near the boundary") {
    const auto pow3 = power_profile(3.0, 64);
    CHECK(gsinc::heuristic_classify(pow3, 2.2) == Verdict::Converges);
    CHECK(gsinc::heuristic_classify(pow3, 2.5) == Verdict::Inconclusive);
    CHECK(gsinc::heuristic_classify(pow3, 2.8) == Verdict::Diverges);

    // Geometric tails vanish entirely below the double floor, so the two
    // partial sums coincide bit for bit.
    const auto geo = geometric_profile(0.5, 32);
    CHECK(gsinc::heuristic_classify(geo, 1.0) == Verdict::Converges);
}

TEST_CASE("custom sequences classify through the heuristic on their prefix") {
    std::vector<double> flat(2000, 1.0);
    const CoeffSeq diverging(std::move(flat), DecayClass::custom(1.0, 1.0));
    CHECK(gsinc::classify(diverging, 1.0) == Verdict::Diverges);

    std::vector<double> halving(200);
    for (std::size_t n = 0; n < halving.size(); ++n)
        halving[n] = std::pow(0.5, static_cast<double>(n));
    const CoeffSeq converging(std::move(halving), DecayClass::custom(1e-30, 1e-30));
    CHECK(gsinc::classify(converging, 1.0) == Verdict::Converges);
}

TEST_CASE("smoothness floor from the decay class") {
    CHECK(std::isinf(
        gsinc::nu2_lower_bound(CoeffSeq({1.0}, DecayClass::finite()))));
    CHECK(std::isinf(gsinc::nu2_lower_bound(geometric_profile(0.7, 8))));
    CHECK(gsinc::nu2_lower_bound(power_profile(3.0, 16)) ==
          doctest::Approx(2.5).epsilon(1e-15));
    CHECK_THROWS_AS(
        gsinc::nu2_lower_bound(CoeffSeq({0.5}, DecayClass::custom(0.0, 0.0))),
        gsinc::InputError);
}

TEST_CASE("verdict names") {
    CHECK(gsinc::to_string(Verdict::Converges) == "converges");
    CHECK(gsinc::to_string(Verdict::Diverges) == "diverges");
    CHECK(gsinc::to_string(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("study reports align with the single-order entry points") {
    const auto pow3 = power_profile(3.0, 64);
    const std::vector<double> s{0.0, 1.0, 2.4, 2.5, 2.6};
    const auto report = gsinc::run_smoothness_study(pow3, s, 10000);
    REQUIRE(report.s_values.size() == 5);
    REQUIRE(report.partial_n.size() == 5);
    REQUIRE(report.partial_2n.size() == 5);
    REQUIRE(report.verdicts.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(report.partial_n[i] ==
              gsinc::series_partial(pow3, s[i], 10000));
        CHECK(report.partial_2n[i] ==
              gsinc::series_partial(pow3, s[i], 20000));
        CHECK(report.partial_n[i] <= report.partial_2n[i]);
        CHECK(report.verdicts[i] == gsinc::classify(pow3, s[i]));
    }
    CHECK(report.nu2_known);
    CHECK(report.nu2 == doctest::Approx(2.5).epsilon(1e-15));

    std::vector<double> flat(2000, 1.0);
    const CoeffSeq custom(std::move(flat), DecayClass::custom(1.0, 1.0));
    const auto creport = gsinc::run_smoothness_study(custom, std::vector<double>{1.0});
    CHECK(!creport.nu2_known);
    CHECK(creport.verdicts[0] == Verdict::Diverges);

    CHECK_THROWS_AS(gsinc::run_smoothness_study(pow3, std::vector<double>{}),
                    gsinc::InputError);
}
