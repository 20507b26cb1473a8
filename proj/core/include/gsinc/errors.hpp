#pragma once

#include <stdexcept>
#include <string>

namespace gsinc {

/// Thrown when a constructor or operation receives arguments that violate
/// its documented preconditions (bad decay parameters, |z| > 1, malformed files).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a certified numerical result cannot meet the requested
/// tolerance (quadrature domain too small, coefficient extraction not converged).
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gsinc
