#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binom {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or problem text. `position()` is a byte offset into
/// the parsed string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A bounded search (retries, fallback enumeration, precision escalation)
/// ran out of budget.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

} // namespace binom
