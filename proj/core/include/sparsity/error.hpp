#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsity {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A move whose preconditions do not hold in the current game state.
class IllegalMove : public Error {
public:
    using Error::Error;
};

/// Malformed textual input; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Brute-force and enumeration routines refuse inputs beyond their size limits.
class SizeLimit : public Error {
public:
    using Error::Error;
};

}  // namespace sparsity
