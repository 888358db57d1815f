#pragma once

#include <stdexcept>
#include <string>

namespace qkostka {

/// Input that violates a documented precondition (bad weights, mismatched areas, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction that is supposed to be valid turned out not to be.
/// Signals a bug or a counterexample to a claimed invariant.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The request is well formed but outside what the library computes
/// (exact ranks for m > 1, for instance).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qkostka
