#include "gsinc/grid.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "gsinc/errors.hpp"

namespace gsinc {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

// Whole-string strtod; returns false on trailing junk or empty input.
bool parse_number(const std::string& s, double& out) {
    if (s.empty())
        return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + s.size() && std::isfinite(out);
}

} // namespace

double parse_pi_value(const std::string& token) {
    const std::string s = trim(token);
    if (s.empty())
        throw InputError("empty numeric token");

    std::string body = s;
    double sign = 1.0;
    if (body[0] == '+' || body[0] == '-') {
        if (body[0] == '-')
            sign = -1.0;
        body = body.substr(1);
    }

    const std::size_t at = body.find("pi");
    double value;
    if (at == std::string::npos) {
        const std::size_t slash = body.find('/');
        if (slash == std::string::npos) {
            if (!parse_number(body, value))
                throw InputError("cannot parse numeric token '" + s + "'");
            return sign * value;
        }
        double num, den;
        if (!parse_number(body.substr(0, slash), num) ||
            !parse_number(body.substr(slash + 1), den) || den == 0.0)
            throw InputError("cannot parse numeric token '" + s + "'");
        return sign * num / den;
    }

    double factor = 1.0;
    const std::string prefix = body.substr(0, at);
    if (!prefix.empty() && !parse_number(prefix, factor))
        throw InputError("cannot parse numeric token '" + s + "'");
    value = factor * std::numbers::pi;

    const std::string suffix = body.substr(at + 2);
    if (!suffix.empty()) {
        if (suffix[0] != '/')
            throw InputError("cannot parse numeric token '" + s + "'");
        double den;
        if (!parse_number(suffix.substr(1), den) || den == 0.0)
            throw InputError("cannot parse numeric token '" + s + "'");
        value /= den;
    }
    return sign * value;
}

GridSpec GridSpec::parse(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos)
        throw InputError("grid must look like lo:hi:step");
    GridSpec g;
    g.lo = parse_pi_value(text.substr(0, c1));
    g.hi = parse_pi_value(text.substr(c1 + 1, c2 - c1 - 1));
    g.step = parse_pi_value(text.substr(c2 + 1));
    if (!(g.step > 0.0))
        throw InputError("grid step must be positive");
    if (!(g.lo < g.hi))
        throw InputError("grid needs lo < hi");
    if ((g.hi - g.lo) / g.step > 5e7)
        throw InputError("grid would have too many points");
    return g;
}

std::vector<double> GridSpec::points() const {
    const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i)
        out.push_back(lo + step * static_cast<double>(i));
    return out;
}

} // namespace gsinc
