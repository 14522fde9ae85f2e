#pragma once

#include <stdexcept>
#include <string>

namespace tworay {

// Input that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed scenario text; carries the 1-based line number (0 if unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace tworay
