#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgemon {

// Malformed or out-of-contract input supplied by the caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A solver was handed an instance outside the class or parameter regime it supports.
class ContractViolation : public InputError {
public:
    using InputError::InputError;
};

// Search limits (vertex count or node count) were exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant failure. Indicates a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const char* what) {
    if (!condition) throw InvariantError(what);
}

}  // namespace edgemon
