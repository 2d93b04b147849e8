#pragma once

#include <stdexcept>
#include <string>

namespace windmill {

/// Base class for all domain errors raised by this library. The CLI maps
/// any DomainError to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration requested for a perfect square (the triple set is infinite).
struct SquareInput : DomainError {
    using DomainError::DomainError;
};

/// An iteration cap was reached before the sought element appeared.
struct CapExhausted : DomainError {
    using DomainError::DomainError;
};

/// A mapping asserted to be an involution on a domain is not one.
struct NotInvolution : DomainError {
    using DomainError::DomainError;
};

/// A start element required to be f-fixed is not.
struct NotFFixed : DomainError {
    using DomainError::DomainError;
};

/// size - fixed_count must be even to pair up the moved elements.
struct ParityError : DomainError {
    using DomainError::DomainError;
};

/// Input outside the algorithm's domain (wrong residue or perfect square).
struct InapplicableInput : DomainError {
    using DomainError::DomainError;
};

/// The orbit hit a second zagier fixed point instead of a flip fixed
/// point; the caller asked for a decomposition that does not exist on
/// this orbit (composite input).
struct NoFlipFixedPoint : DomainError {
    using DomainError::DomainError;
};

/// A renderer was handed a triple with a zero component.
struct ImproperTriple : DomainError {
    using DomainError::DomainError;
};

/// Two algorithms that must agree returned different decompositions.
struct Disagreement : DomainError {
    using DomainError::DomainError;
};

}  // namespace windmill
