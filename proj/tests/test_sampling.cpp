#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "gsinc/errors.hpp"
#include "gsinc/generators.hpp"
#include "gsinc/sampling.hpp"

using gsinc::CoeffSeq;
using gsinc::DecayClass;
using gsinc::GeneralizedSinc;
using gsinc::QuadratureSpec;
using gsinc::SampledSignal;

namespace {

constexpr double pi = std::numbers::pi;

GeneralizedSinc classic_kernel() {
    return GeneralizedSinc(CoeffSeq({1.0}, DecayClass::finite()));
}

GeneralizedSinc geometric_kernel(double a, std::size_t n) {
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i)
        b[i] = (1.0 - a) * std::pow(a, static_cast<double>(i));
    return GeneralizedSinc(CoeffSeq(std::move(b), DecayClass::geometric(a)));
}

} // namespace

TEST_CASE("construction enforces the unit coefficient sum") {
    CHECK_NOTHROW(SampledSignal(classic_kernel(), {{0, 1.0}}));
    CHECK_NOTHROW(SampledSignal(geometric_kernel(0.5, 64), {{0, 1.0}}));
    const GeneralizedSinc off(CoeffSeq({0.9}, DecayClass::finite()));
    CHECK_THROWS_AS(SampledSignal(off, {{0, 1.0}}), gsinc::InputError);
    CHECK_THROWS_AS(SampledSignal(classic_kernel(), {}), gsinc::InputError);
    CHECK_THROWS_AS(SampledSignal(classic_kernel(), {{0, std::nan("")}}),
                    gsinc::InputError);
}

TEST_CASE("window bookkeeping fills gaps with zero") {
    const SampledSignal sig(classic_kernel(), {{-2, 1.0}, {0, 3.0}});
    CHECK(sig.n_min() == -2);
    CHECK(sig.n_max() == 0);
    CHECK(sig.sample(-2) == 1.0);
    CHECK(sig.sample(-1) == 0.0);
    CHECK(sig.sample(0) == 3.0);
    CHECK(sig.sample(1) == 0.0);
    CHECK(sig.sample(-7) == 0.0);
    CHECK(sig.sample_sq_sum() == doctest::Approx(10.0));
}

TEST_CASE("vector constructor matches the map constructor") {
    const SampledSignal a(classic_kernel(), {{-1, 0.5}, {0, 1.0}, {1, 0.25}});
    const SampledSignal b(classic_kernel(), -1, {0.5, 1.0, 0.25});
    CHECK(a.n_min() == b.n_min());
    CHECK(a.sample(-1) == b.sample(-1));
    CHECK(a.sample(1) == b.sample(1));
    CHECK(a.reconstruct(0.3) == b.reconstruct(0.3));
}

TEST_CASE("a delta signal reconstructs to the kernel itself") {
    const SampledSignal sig(geometric_kernel(0.5, 64), {{0, 1.0}});
    for (double t : {0.0, 0.7, -3.2, 11.0})
        CHECK(sig.reconstruct(t) == sig.kernel().eval(t));
}

TEST_CASE("reconstruction interpolates the samples on the lattice") {
    const SampledSignal sig(geometric_kernel(0.5, 64),
                            {{-3, 0.4}, {-1, -1.2}, {0, 2.0}, {4, 0.9}});
    for (long n = -4; n <= 5; ++n) {
        CHECK(std::abs(sig.reconstruct(static_cast<double>(n) * pi) -
                       sig.sample(n)) <= 1e-10);
    }
}

TEST_CASE("reconstruction is linear in the samples") {
    const SampledSignal f(classic_kernel(), {{-1, 0.5}, {1, 1.5}});
    const SampledSignal g(classic_kernel(), {{0, -0.3}, {1, 0.4}});
    const SampledSignal sum(classic_kernel(),
                            {{-1, 0.5}, {0, -0.3}, {1, 1.9}});
    for (double t : {0.2, 1.9, -4.4})
        CHECK(sum.reconstruct(t) ==
              doctest::Approx(f.reconstruct(t) + g.reconstruct(t))
                  .epsilon(1e-13));
}

TEST_CASE("shifting the window translates the reconstruction") {
    const SampledSignal base(classic_kernel(), {{-1, 0.5}, {0, 1.0}, {2, 0.7}});
    const SampledSignal moved(classic_kernel(), {{2, 0.5}, {3, 1.0}, {5, 0.7}});
    for (double t : {0.0, 0.33, -2.1, 4.9}) {
        CHECK(moved.reconstruct(t + 3.0 * pi) ==
              doctest::Approx(base.reconstruct(t)).epsilon(1e-9));
    }
}

TEST_CASE("spectrum vanishes identically outside the filter support") {
    const SampledSignal sig(geometric_kernel(0.5, 8), {{0, 1.0}, {1, -2.0}});
    CHECK(sig.spectrum(8.0) == std::complex<double>{0.0, 0.0});
    CHECK(sig.spectrum(-9.5) == std::complex<double>{0.0, 0.0});
    CHECK(std::abs(sig.spectrum(7.9)) > 0.0);
}

TEST_CASE("spectrum of a real signal has conjugate symmetry") {
    const SampledSignal sig(geometric_kernel(0.5, 8),
                            {{-1, 0.5}, {0, 1.0}, {2, -0.8}});
    for (double xi : {0.3, 1.7, 5.2}) {
        const auto a = sig.spectrum(xi);
        const auto b = sig.spectrum(-xi);
        CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-13));
        CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-13));
    }
}

TEST_CASE("spectrum matches a direct transform of the reconstruction") {
    // Independent oracle: numerically transform f itself.
    const SampledSignal sig(classic_kernel(), {{0, 1.0}});
    const double T = 3000.0;
    const double h = 0.05;
    for (double xi : {0.3, 0.7}) {
        std::complex<double> acc{0.0, 0.0};
        const long m = static_cast<long>(2.0 * T / h);
        for (long i = 0; i < m; ++i) {
            const double t = -T + (static_cast<double>(i) + 0.5) * h;
            acc += sig.reconstruct(t) *
                   std::exp(std::complex<double>{0.0, -xi * t});
        }
        acc *= h / std::sqrt(2.0 * pi);
        CHECK(std::abs(sig.spectrum(xi) - acc) <= 5e-3);
    }
}

TEST_CASE("sample-side energy identity against explicit quadrature") {
    const SampledSignal sig(classic_kernel(), {{0, 1.0}});
    const double tol = 1e-3 * pi;
    const auto quad = gsinc::parseval_quadrature_for_tolerance(sig, tol);
    const auto r = gsinc::parseval_check(sig, quad);
    CHECK(r.rhs == doctest::Approx(pi).epsilon(1e-14));
    CHECK(r.tail_bound <= 0.5 * tol * (1.0 + 1e-12));
    CHECK(std::abs(r.lhs - r.rhs) <= tol);
    CHECK(std::abs(r.lhs - r.rhs) / r.rhs < 1e-3);
}

TEST_CASE("energy identity holds for a multi-sample signal") {
    const SampledSignal sig(classic_kernel(), {{-1, 0.5}, {0, 1.0}, {1, 1.0}});
    const double rhs_expected = pi * sig.sample_sq_sum();
    const double tol = 1e-3 * rhs_expected;
    const auto quad = gsinc::parseval_quadrature_for_tolerance(sig, tol);
    const auto r = gsinc::parseval_check(sig, quad);
    CHECK(r.rhs == doctest::Approx(rhs_expected).epsilon(1e-14));
    CHECK(std::abs(r.lhs - r.rhs) / r.rhs < 1e-3);
}

TEST_CASE("zero signals carry zero energy on both sides") {
    const SampledSignal sig(classic_kernel(), {{0, 0.0}});
    QuadratureSpec quad;
    quad.half_width = 2.0 * pi;
    const auto r = gsinc::parseval_check(sig, quad);
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.0);
    CHECK(r.tail_bound == 0.0);
    CHECK(sig.l2_norm() == 0.0);
}

TEST_CASE("energy quadrature refuses margins it cannot certify") {
    const SampledSignal sig(classic_kernel(), {{0, 1.0}});
    QuadratureSpec tiny;
    tiny.half_width = 1.0;
    CHECK_THROWS_AS(gsinc::parseval_check(sig, tiny), gsinc::ToleranceError);
    QuadratureSpec strict;
    strict.tolerance = 1e-9; // default margin cannot reach this
    CHECK_THROWS_AS(gsinc::parseval_check(sig, strict), gsinc::ToleranceError);
}

TEST_CASE("sample-side norm matches its definition") {
    const SampledSignal sig(geometric_kernel(0.5, 64), {{0, 2.0}, {3, -1.0}});
    const double l2 = sig.kernel().l2_norm();
    CHECK(sig.l2_norm() == doctest::Approx(l2 * std::sqrt(pi * 5.0)));
}
