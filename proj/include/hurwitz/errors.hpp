#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in binary spaces of different dimension.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(int lhs, int rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Argument outside the documented domain (bad index, wrong residue, non-prime order, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A search or expansion ran past its configured limit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

constexpr void require_same_dim(int lhs, int rhs)
{
    if (lhs != rhs) throw DimensionMismatch(lhs, rhs);
}

} // namespace hurwitz
