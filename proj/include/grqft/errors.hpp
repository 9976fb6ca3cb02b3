// errors.hpp -- exception types shared by all grqft components.

#pragma once

#include <stdexcept>
#include <string>

namespace grqft {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// p failed the primality check.
class NotPrime : public Error {
public:
    explicit NotPrime(const std::string& what) : Error(what) {}
};

/// The defining polynomial failed a basic-primitivity sub-check; the
/// message names the sub-check that failed.
class NotBasicPrimitive : public Error {
public:
    explicit NotBasicPrimitive(const std::string& what) : Error(what) {}
};

/// A matrix-producing operation was asked for a ring whose cardinality
/// exceeds the configured dimension cap.
class DimensionCapExceeded : public Error {
public:
    explicit DimensionCapExceeded(const std::string& what) : Error(what) {}
};

/// An element does not belong to the ring performing the operation.
class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

class NotAUnit : public Error {
public:
    explicit NotAUnit(const std::string& what) : Error(what) {}
};

class NotAZeroDivisor : public Error {
public:
    explicit NotAZeroDivisor(const std::string& what) : Error(what) {}
};

/// Trace produced a result outside the base ring. Signals an arithmetic
/// bug, never a valid input.
class TraceNotInBaseRing : public Error {
public:
    explicit TraceNotInBaseRing(const std::string& what) : Error(what) {}
};

/// No unit pivot available during elimination over Z/p^s.
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// Readout found no amplitude above the decision threshold. Signals an
/// implementation bug: the ideal final state is a basis state.
class AmbiguousMeasurement : public Error {
public:
    explicit AmbiguousMeasurement(const std::string& what) : Error(what) {}
};

/// Exhaustive polynomial search found nothing. Signals a bug, since a
/// basic primitive polynomial always exists.
class SearchSpaceExhausted : public Error {
public:
    explicit SearchSpaceExhausted(const std::string& what) : Error(what) {}
};

/// A spec parameter is outside the range this implementation supports
/// (e.g. p^s beyond 2^31, or malformed field lengths).
class SpecOutOfRange : public Error {
public:
    explicit SpecOutOfRange(const std::string& what) : Error(what) {}
};

} // namespace grqft
