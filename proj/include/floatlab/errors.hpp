#pragma once

#include <stdexcept>
#include <string>

namespace floatlab {

// Bad arguments, malformed specs, out-of-domain parameters.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Solver did not converge, degenerate result, numerics fault.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace floatlab
