#pragma once

#include <stdexcept>
#include <string>

namespace lattica {

/// Malformed input, invalid parameters, or an operation undefined on its input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configurable resource ceiling was exceeded (concept count, motif search size, ...).
class CeilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure carrying the 1-based line number where it happened.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace lattica
