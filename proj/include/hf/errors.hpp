#pragma once

#include <stdexcept>
#include <string>

namespace hf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (division by zero, v <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A polynomial division that was required to be exact left a remainder.
class ExactDivisionError : public Error {
public:
    using Error::Error;
};

/// Series division by a series whose lowest coefficient cannot be inverted.
class SeriesDivisionError : public Error {
public:
    using Error::Error;
};

/// A Hankel determinant needed as a divisor vanished.
class DegenerateMomentsError : public Error {
public:
    using Error::Error;
};

/// Not enough recurrence parameters for the requested depth.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Equivalence transform with a vanishing (or non-unit r_0) scale factor.
class EquivalenceError : public Error {
public:
    using Error::Error;
};

/// Canonical contraction does not exist (a required partial denominator vanishes).
class ContractionError : public Error {
public:
    using Error::Error;
};

/// Logarithmic terms failed to cancel while assembling a formal series.
class FormalCancellationError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (sequence names, polynomial text, JSON payloads).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hf
