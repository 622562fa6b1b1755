#pragma once

#include <stdexcept>
#include <string>

namespace motives {

/// Base class for all errors raised by the library.
struct MotiveError : std::runtime_error {
    explicit MotiveError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAUnit : MotiveError {
    explicit NotAUnit(const std::string& msg) : MotiveError(msg) {}
};

struct LimitExceeded : MotiveError {
    explicit LimitExceeded(const std::string& msg) : MotiveError(msg) {}
};

struct InvalidType : MotiveError {
    explicit InvalidType(const std::string& msg) : MotiveError(msg) {}
};

struct NotDominant : MotiveError {
    explicit NotDominant(const std::string& msg) : MotiveError(msg) {}
};

struct DivergentSpecialValue : MotiveError {
    explicit DivergentSpecialValue(const std::string& msg) : MotiveError(msg) {}
};

struct NonConvergent : MotiveError {
    explicit NonConvergent(const std::string& msg) : MotiveError(msg) {}
};

struct DivisionByZero : MotiveError {
    explicit DivisionByZero(const std::string& msg) : MotiveError(msg) {}
};

struct DegTooSmall : MotiveError {
    explicit DegTooSmall(const std::string& msg) : MotiveError(msg) {}
};

struct ConfigError : MotiveError {
    explicit ConfigError(const std::string& msg) : MotiveError(msg) {}
};

}  // namespace motives
