#pragma once

#include <stdexcept>
#include <string>

namespace vqebench {

/// Mismatched qubit counts, out-of-range indices, bad dimensions.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Violated precondition of an operation (overlapping orbital sets,
/// non-Hermitian observable, unsupported ansatz shape, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unbound or mis-bound circuit parameter.
struct BindingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input file could not be parsed; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_number(line) {}
    long line_number;
};

/// Requested computation exceeds a configured resource cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical breakdown (NaN cost, singular matrix, ...).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vqebench
