#pragma once

#include <stdexcept>
#include <string>

namespace nrcn {

// p failed the primality check.
struct InvalidPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (i = 0, b = 0, k out of range, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Input exceeds a documented computational bound.
struct ResourceLimitError : std::length_error {
    using std::length_error::length_error;
};

// Natural number outside the supported 63-bit range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace nrcn
