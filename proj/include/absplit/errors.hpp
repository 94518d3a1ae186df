#pragma once

#include <stdexcept>
#include <string>

namespace absplit {

/// Operands of a truncated-algebra operation carry different truncation orders.
struct OrderMismatch : std::invalid_argument {
    explicit OrderMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the domain of a series or functional (e.g. log of a non-unit).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed user input: bad discriminant, non power-of-two component count, ...
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but lacks data the computation needs (a missing epsilon).
struct IncompleteInput : std::invalid_argument {
    explicit IncompleteInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural invariant of supplied data does not hold.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace absplit
