#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is malformed at the structural level (non-square matrix, bad index, ...).
// Distinct from a numeric check that merely fails.
struct StructuralError : Error {
    using Error::Error;
};

// Numeric data does not satisfy the S-matrix axioms / integrality gates.
struct NotModularData : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Operation is well defined but deliberately not handled (out of scope input).
struct Unsupported : Error {
    using Error::Error;
};

// A 2-cocycle table violates the cocycle identity; carries a witness triple.
struct NotACocycle : Error {
    int h, k, l;
    NotACocycle(const std::string& msg, int h_, int k_, int l_)
        : Error(msg), h(h_), k(k_), l(l_) {}
};

// Projective irreducibles requested for a case that needs an external table.
struct NeedsCharacterTable : Error {
    using Error::Error;
};

// Supplied character table fails the integrality gate of the fusion formula.
struct BadCharacterTable : Error {
    using Error::Error;
};

// Orbifold descriptor violates one of its internal consistency laws.
struct InvalidDescriptor : Error {
    std::string invariant;
    InvalidDescriptor(const std::string& inv, const std::string& msg)
        : Error(msg), invariant(inv) {}
};

// Modular data requested from a model that is not rational.
struct NotRational : Error {
    using Error::Error;
};

// Construction would exceed the desk-scale size guard.
struct TooLarge : Error {
    using Error::Error;
};

} // namespace mtc
