#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "gsinc/coeff_seq.hpp"
#include "gsinc/generators.hpp"
#include "gsinc/sampling.hpp"

namespace gsinc {

/// Reads a coefficient file.  Two layouts are accepted:
///
///   {"coeffs": [...], "decay_class": {"kind": "geometric", "param": 0.5}}
///   {"blaschke": [0.5, -0.3], "n_terms": 64}
///
/// decay_class kinds: "finite" (default), "geometric" (param = ratio),
/// "power_law" (param = exponent), "custom" (optional "l1_tail", "l2_tail").
/// The blaschke layout expands the product into its coefficient sequence.
/// Malformed files throw InputError.
CoeffSeq load_coeffs(const std::string& path);

void save_coeffs(const CoeffSeq& coeffs, const std::string& path);

/// Reads a sampled signal:
///
///   {"kernel": <coefficient layout>, "samples": {"-1": 0.5, "0": 1.0}}
///
/// Sample keys are signed integers; gaps inside the window are zero.
SampledSignal load_signal(const std::string& path);

/// Rows of doubles (and occasional strings) printed with %.17g, so values
/// round-trip exactly and repeated runs are byte-identical.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void write_row(const std::vector<double>& values);
    void write_row_mixed(const std::vector<std::string>& cells);

    static std::string format_value(double v);

private:
    std::FILE* out_;
};

/// One named pass/fail line of a run summary.
struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double bound = 0.0;
};

/// Writes {"command":..., "ok":..., "checks":[...]} matching
/// summary.schema.json shipped with the command-line tool.
void write_summary(const std::string& path, const std::string& command,
                   const std::vector<CheckResult>& checks);

} // namespace gsinc
