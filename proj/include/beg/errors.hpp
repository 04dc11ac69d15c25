#pragma once

#include <stdexcept>
#include <string>

namespace beg {

// Bad user input: parameters out of range, malformed config or files.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called on data that does not meet its stated preconditions.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace beg
