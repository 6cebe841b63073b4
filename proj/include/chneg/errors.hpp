#pragma once

#include <stdexcept>
#include <string>

namespace chneg {

/// Bad input: dimension mismatches, domain violations, failed matrix checks.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative numerics failed to reach tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chneg
