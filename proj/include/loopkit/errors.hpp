#pragma once

#include <stdexcept>
#include <string>

namespace loopkit {

// Caller broke a precondition of the API (mismatched shapes, alphabets...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Series whose constant term is not 1 where a unit is required.
class NonUnitError : public DomainError {
public:
    using DomainError::DomainError;
};

// A cross-check between two independent routes failed.
class InconsistencyError : public std::runtime_error {
public:
    InconsistencyError(const std::string &what, int degree = -1)
        : std::runtime_error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

// Malformed input text (JSON, rationals, permutations).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is well formed but the cohomology data cannot come from a manifold
// of the requested kind.
class RealizabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refusal to build a word space larger than the configured limit.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace loopkit
