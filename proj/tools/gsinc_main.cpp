// Command-line front end: evaluates kernels, reconstructs sampled signals,
// and runs the truncation, noise, and smoothness studies.  Every subcommand
// writes a CSV of raw results plus a JSON summary of named pass/fail checks
// (see summary.schema.json).  Exit codes: 0 all checks passed, 1 at least
// one check failed, 2 malformed input or unreachable tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsinc/gsinc.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct CommonOpts {
    std::string out;
    std::string summary;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--out", opts.out, "output CSV path")->required();
    sub->add_option("--summary", opts.summary,
                    "summary JSON path (default: <out>.summary.json)");
}

int finish(const CommonOpts& opts, const std::string& command,
           const std::vector<gsinc::CheckResult>& checks) {
    const std::string path =
        opts.summary.empty() ? opts.out + ".summary.json" : opts.summary;
    gsinc::write_summary(path, command, checks);
    bool ok = true;
    for (const auto& c : checks) {
        std::cerr << (c.pass ? "[ok]   " : "[FAIL] ") << command << "/"
                  << c.name << "  value=" << c.value << "  bound=" << c.bound
                  << "\n";
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(gsinc::parse_pi_value(item));
    if (out.empty())
        throw gsinc::InputError("expected a comma-separated list of values");
    return out;
}

std::vector<int> parse_depths(const std::string& text) {
    std::vector<int> out;
    const auto push = [&out](const std::string& tok) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw gsinc::InputError("cannot parse depth '" + tok + "'");
        }
    };
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        std::vector<int> ends;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':'))
            push(item);
        if (out.size() != 2 || out[0] > out[1])
            throw gsinc::InputError("depth range must look like lo:hi");
        ends = out;
        out.clear();
        for (int d = ends[0]; d <= ends[1]; ++d)
            out.push_back(d);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        push(item);
    if (out.empty())
        throw gsinc::InputError("expected depths as lo:hi or a comma list");
    return out;
}

int run_eval(const std::string& coeffs_path, const std::string& grid_text,
             double tol, const CommonOpts& opts) {
    const gsinc::GeneralizedSinc kernel(gsinc::load_coeffs(coeffs_path));
    const auto grid = gsinc::GridSpec::parse(grid_text).points();

    gsinc::CsvWriter csv(opts.out, {"t", "sinc", "sinc_spectral", "envelope"});
    double max_gap = 0.0;
    double max_excess = 0.0;
    for (double t : grid) {
        const double closed = kernel.eval(t);
        const double spectral = kernel.eval_spectral(t);
        const double env = kernel.decay_envelope(t);
        csv.write_row({t, closed, spectral, env});
        max_gap = std::max(max_gap, std::abs(closed - spectral));
        max_excess = std::max(max_excess, std::abs(closed) - env);
    }

    std::vector<gsinc::CheckResult> checks;
    checks.push_back({"dual_route_max_gap", max_gap <= tol, max_gap, tol});
    checks.push_back(
        {"decay_envelope_dominates", max_excess <= 1e-10, max_excess, 0.0});
    return finish(opts, "eval", checks);
}

int run_reconstruct(const std::string& signal_path, const std::string& grid_text,
                    double tol, const CommonOpts& opts) {
    const gsinc::SampledSignal sig = gsinc::load_signal(signal_path);
    const auto grid = gsinc::GridSpec::parse(grid_text).points();

    gsinc::CsvWriter csv(opts.out, {"t", "value"});
    for (double t : grid)
        csv.write_row({t, sig.reconstruct(t)});

    // The defining property of the interpolation: it matches the samples on
    // the lattice points inside the grid's range.
    double max_gap = 0.0;
    for (long n = sig.n_min(); n <= sig.n_max(); ++n) {
        const double t = static_cast<double>(n) * pi;
        if (t < grid.front() - 1e-12 || t > grid.back() + 1e-12)
            continue;
        max_gap = std::max(max_gap,
                           std::abs(sig.reconstruct(t) - sig.sample(n)));
    }

    std::vector<gsinc::CheckResult> checks;
    checks.push_back({"lattice_interpolation", max_gap <= tol, max_gap, tol});
    return finish(opts, "reconstruct", checks);
}

int run_truncation(const std::string& signal_path, const std::string& depths_text,
                   const std::string& step_text, const CommonOpts& opts) {
    const gsinc::SampledSignal sig = gsinc::load_signal(signal_path);
    const auto depths = parse_depths(depths_text);
    const double step = gsinc::parse_pi_value(step_text);
    const auto study = gsinc::run_truncation_study(sig, depths, step);

    gsinc::CsvWriter csv(opts.out, {"depth", "sup_error", "at_t", "bound"});
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < study.depths.size(); ++i) {
        csv.write_row({static_cast<double>(study.depths[i]), study.sup_error[i],
                       study.sup_error_at[i], study.bound[i]});
        if (study.bound[i] > 0.0)
            worst_ratio = std::max(worst_ratio,
                                   study.sup_error[i] / study.bound[i]);
    }

    std::vector<gsinc::CheckResult> checks;
    checks.push_back({"bound_dominates", worst_ratio <= 1.0 + 1e-12,
                      worst_ratio, 1.0});
    int asymptotic = 0;
    for (int d : study.depths)
        asymptotic += d >= 8 ? 1 : 0;
    if (asymptotic >= 3) {
        const double off = std::abs(study.bound_slope + 0.5);
        checks.push_back({"bound_slope_near_half", off <= 0.05, off, 0.05});
    }
    return finish(opts, "truncation", checks);
}

int run_noise(const std::string& signal_path, const std::string& grid_text,
              double sigma, std::size_t trials, const std::string& dist_text,
              std::uint64_t seed, int threads, const CommonOpts& opts) {
    const gsinc::SampledSignal sig = gsinc::load_signal(signal_path);
    const auto grid = gsinc::GridSpec::parse(grid_text).points();

    gsinc::NoiseModel noise;
    noise.sigma = sigma;
    noise.seed = seed;
    if (dist_text == "gaussian")
        noise.dist = gsinc::NoiseDistribution::Gaussian;
    else if (dist_text == "uniform")
        noise.dist = gsinc::NoiseDistribution::UniformCentered;
    else
        throw gsinc::InputError("--dist must be 'gaussian' or 'uniform'");

    const auto study = gsinc::run_noise_study(sig, noise, trials, grid, threads);

    gsinc::CsvWriter csv(opts.out, {"t", "mean_err", "var_err", "exact_var",
                                    "var_bound", "mean_band"});
    double worst_bound_ratio = 0.0;
    double worst_exact_gap = 0.0;
    long band_misses = 0;
    for (std::size_t i = 0; i < study.t_grid.size(); ++i) {
        csv.write_row({study.t_grid[i], study.mean_err[i], study.var_err[i],
                       study.exact_var[i], study.bound[i], study.mean_band[i]});
        if (study.bound[i] > 0.0)
            worst_bound_ratio = std::max(worst_bound_ratio,
                                         study.var_err[i] / study.bound[i]);
        if (study.exact_var[i] > 0.0)
            worst_exact_gap =
                std::max(worst_exact_gap,
                         std::abs(study.var_err[i] / study.exact_var[i] - 1.0));
        if (std::abs(study.mean_err[i]) > study.mean_band[i])
            ++band_misses;
    }

    // One 4-sigma excursion of the empirical mean across a whole grid is
    // ordinary Monte Carlo luck; more than ~1 in 33 points is not.
    const long allowed_misses = std::max<long>(
        1, static_cast<long>(study.t_grid.size()) / 33);

    std::vector<gsinc::CheckResult> checks;
    checks.push_back({"variance_within_bound", worst_bound_ratio <= 1.0 + 1e-12,
                      worst_bound_ratio, 1.0});
    checks.push_back({"variance_near_exact", worst_exact_gap <= 0.10,
                      worst_exact_gap, 0.10});
    checks.push_back({"mean_within_band", band_misses <= allowed_misses,
                      static_cast<double>(band_misses),
                      static_cast<double>(allowed_misses)});
    return finish(opts, "noise", checks);
}

int run_smoothness(const std::string& coeffs_path, const std::string& s_text,
                   std::size_t terms, const CommonOpts& opts) {
    const gsinc::CoeffSeq coeffs = gsinc::load_coeffs(coeffs_path);
    const auto s_values = parse_value_list(s_text);
    const auto report = gsinc::run_smoothness_study(coeffs, s_values, terms);

    gsinc::CsvWriter csv(opts.out, {"s", "partial_n", "partial_2n", "verdict"});
    for (std::size_t i = 0; i < report.s_values.size(); ++i) {
        csv.write_row_mixed({gsinc::CsvWriter::format_value(report.s_values[i]),
                             gsinc::CsvWriter::format_value(report.partial_n[i]),
                             gsinc::CsvWriter::format_value(report.partial_2n[i]),
                             gsinc::to_string(report.verdicts[i])});
    }

    // Convergence is monotone in s: sort the orders and make sure no
    // convergent verdict appears above a divergent one.
    std::vector<std::size_t> order(report.s_values.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.s_values[a] < report.s_values[b];
    });
    bool monotone = true;
    bool seen_divergent = false;
    for (std::size_t i : order) {
        if (report.verdicts[i] == gsinc::Verdict::Diverges)
            seen_divergent = true;
        else if (report.verdicts[i] == gsinc::Verdict::Converges && seen_divergent)
            monotone = false;
    }

    std::vector<gsinc::CheckResult> checks;
    checks.push_back({"verdict_monotone_in_s", monotone, monotone ? 1.0 : 0.0,
                      1.0});
    if (report.nu2_known)
        checks.push_back({"smoothness_floor", true, report.nu2, 0.0});
    return finish(opts, "smoothness", checks);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized sinc kernels: evaluation, reconstruction, and "
                 "error studies"};
    app.require_subcommand(1);

    std::string coeffs_path, signal_path, grid_text;
    std::string depths_text = "1:32";
    std::string step_text = "pi/32";
    std::string dist_text = "gaussian";
    std::string s_text;
    double tol = 1e-10;
    double sigma = 0.1;
    std::size_t trials = 10000;
    std::size_t terms = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
    CommonOpts eval_opts, recon_opts, trunc_opts, noise_opts, smooth_opts;

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate a kernel on a grid by both routes");
    eval->add_option("--coeffs", coeffs_path, "coefficient JSON")->required();
    eval->add_option("--grid", grid_text, "t grid lo:hi:step")->required();
    eval->add_option("--tol", tol, "dual-route agreement tolerance");
    add_common(eval, eval_opts);

    CLI::App* recon = app.add_subcommand(
        "reconstruct", "reconstruct a sampled signal on a grid");
    recon->add_option("--signal", signal_path, "signal JSON")->required();
    recon->add_option("--grid", grid_text, "t grid lo:hi:step")->required();
    recon->add_option("--tol", tol, "lattice interpolation tolerance");
    add_common(recon, recon_opts);

    CLI::App* trunc = app.add_subcommand(
        "truncation", "truncation error study against the certified bound");
    trunc->add_option("--signal", signal_path, "signal JSON")->required();
    trunc->add_option("--depths", depths_text, "depths as lo:hi or comma list");
    trunc->add_option("--grid-step", step_text, "t grid spacing");
    add_common(trunc, trunc_opts);

    CLI::App* noise = app.add_subcommand(
        "noise", "Monte Carlo study of reconstruction from noisy samples");
    noise->add_option("--signal", signal_path, "signal JSON")->required();
    noise->add_option("--grid", grid_text, "t grid lo:hi:step")->required();
    noise->add_option("--sigma", sigma, "noise standard deviation");
    noise->add_option("--trials", trials, "Monte Carlo trials (>= 1000)");
    noise->add_option("--dist", dist_text, "gaussian or uniform");
    noise->add_option("--seed", seed, "noise seed");
    noise->add_option("--threads", threads, "worker threads over grid points");
    add_common(noise, noise_opts);

    CLI::App* smooth = app.add_subcommand(
        "smoothness", "convergence of the weighted coefficient series");
    smooth->add_option("--coeffs", coeffs_path, "coefficient JSON")->required();
    smooth->add_option("--s", s_text, "comma list of orders s")->required();
    smooth->add_option("--terms", terms, "partial-sum length");
    add_common(smooth, smooth_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*eval)
            return run_eval(coeffs_path, grid_text, tol, eval_opts);
        if (*recon)
            return run_reconstruct(signal_path, grid_text, tol, recon_opts);
        if (*trunc)
            return run_truncation(signal_path, depths_text, step_text, trunc_opts);
        if (*noise)
            return run_noise(signal_path, grid_text, sigma, trials, dist_text,
                             seed, threads, noise_opts);
        if (*smooth)
            return run_smoothness(coeffs_path, s_text, terms, smooth_opts);
    } catch (const gsinc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const gsinc::ToleranceError& e) {
        std::cerr << "tolerance error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
