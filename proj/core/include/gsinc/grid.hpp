#pragma once

#include <string>
#include <vector>

namespace gsinc {

/// Parses a scalar that may carry a pi factor: "2pi", "-10pi", "pi/64",
/// "3pi/4", "pi", or a plain number like "0.5".  Throws InputError on
/// anything else.
double parse_pi_value(const std::string& token);

/// Uniform grid specification "lo:hi:step", each part in parse_pi_value
/// syntax.  Requires lo < hi and step > 0.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    static GridSpec parse(const std::string& text);
    std::vector<double> points() const; // lo, lo+step, ..., through hi
};

} // namespace gsinc
