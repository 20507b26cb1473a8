#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "gsinc/gsinc.hpp"

namespace {

constexpr double pi = std::numbers::pi;

gsinc::GeneralizedSinc geometric_kernel(std::size_t terms) {
    std::vector<double> b(terms);
    for (std::size_t n = 0; n < terms; ++n)
        b[n] = 0.5 * std::pow(0.5, static_cast<double>(n));
    return gsinc::GeneralizedSinc(
        gsinc::CoeffSeq(std::move(b), gsinc::DecayClass::geometric(0.5)));
}

void eval_closed(benchmark::State& state) {
    const auto kernel = geometric_kernel(static_cast<std::size_t>(state.range(0)));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel.eval(t));
        t += 0.37;
        if (t > 300.0)
            t -= 600.0;
    }
}
BENCHMARK(eval_closed)->Arg(1)->Arg(8)->Arg(64);

void eval_spectral(benchmark::State& state) {
    const auto kernel = geometric_kernel(static_cast<std::size_t>(state.range(0)));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel.eval_spectral(t));
        t += 0.37;
        if (t > 300.0)
            t -= 600.0;
    }
}
BENCHMARK(eval_spectral)->Arg(1)->Arg(8)->Arg(64);

void reconstruct_point(benchmark::State& state) {
    std::map<long, double> samples;
    for (long n = -64; n <= 64; ++n) {
        const double x = static_cast<double>(n) / 8.0;
        samples[n] = std::exp(-x * x);
    }
    const gsinc::SampledSignal sig(geometric_kernel(16), std::move(samples));
    double t = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sig.reconstruct(t));
        t += 1.7;
        if (t > 100.0)
            t -= 200.0;
    }
}
BENCHMARK(reconstruct_point);

void shifted_inner_products(benchmark::State& state) {
    const auto kernel = geometric_kernel(16);
    const std::vector<int> shifts{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5};
    const gsinc::QuadratureSpec quad;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gsinc::inner_products_shifted(kernel, shifts, quad));
}
BENCHMARK(shifted_inner_products)->Unit(benchmark::kMillisecond);

void noise_draw(benchmark::State& state) {
    gsinc::NoiseModel m;
    m.sigma = 0.1;
    m.seed = 7;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.draw(trial, static_cast<long>(trial % 129)));
        ++trial;
    }
}
BENCHMARK(noise_draw);

void weighted_series_partial(benchmark::State& state) {
    std::vector<double> b(64);
    for (std::size_t n = 0; n < b.size(); ++n)
        b[n] = std::pow(static_cast<double>(n + 1), -3.0);
    const gsinc::CoeffSeq coeffs(std::move(b), gsinc::DecayClass::power_law(3.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gsinc::series_partial(coeffs, 2.5, 10000));
}
BENCHMARK(weighted_series_partial)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
