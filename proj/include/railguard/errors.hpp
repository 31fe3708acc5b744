#pragma once

#include <stdexcept>
#include <string>

namespace railguard {

// Scenario/document parse failure. Carries the 1-based source line when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A domain invariant does not hold. The message names the invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace railguard
