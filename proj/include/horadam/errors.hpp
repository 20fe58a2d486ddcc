#pragma once

#include <stdexcept>
#include <string>

namespace horadam {

// Domain errors: the requested value is undefined for these inputs.
// The identity checker treats RepeatedRoot / ZeroQ / SumPole as
// "skipped: out of domain" rather than failures.

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct DiscriminantMismatch : std::domain_error {
    DiscriminantMismatch(const std::string& lhs, const std::string& rhs)
        : std::domain_error("discriminant mismatch: sqrt(" + lhs + ") vs sqrt(" + rhs + ")") {}
};

struct ZeroDivisorInverse : std::domain_error {
    ZeroDivisorInverse() : std::domain_error("element has zero field-norm and no inverse") {}
};

struct NotRational : std::domain_error {
    NotRational(const std::string& value)
        : std::domain_error("value has a nonzero surd part: " + value) {}
};

struct RepeatedRoot : std::domain_error {
    RepeatedRoot() : std::domain_error("discriminant p^2 + 4q is zero (repeated root)") {}
};

struct ZeroQ : std::domain_error {
    ZeroQ() : std::domain_error("q = 0 is outside the domain of the closed forms") {}
};

struct SumPole : std::domain_error {
    SumPole() : std::domain_error("p + q = 1 makes 1 - alpha or 1 - beta non-invertible") {}
};

struct NonInvertible : std::domain_error {
    NonInvertible() : std::domain_error("quaternion norm is zero or a zero divisor") {}
};

// Usage errors (CLI exit code 2).

struct UnknownPreset : std::invalid_argument {
    UnknownPreset(const std::string& name) : std::invalid_argument("unknown preset: " + name) {}
};

struct InvalidRange : std::invalid_argument {
    InvalidRange(const std::string& what) : std::invalid_argument("invalid range: " + what) {}
};

struct ParamParseError : std::invalid_argument {
    ParamParseError(const std::string& text)
        : std::invalid_argument("cannot parse parameters: " + text) {}
};

}  // namespace horadam
