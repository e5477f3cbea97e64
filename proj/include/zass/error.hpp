#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- core-series -----------------------------------------------------------

class ZeroConstantDenominator : public Error {
public:
    ZeroConstantDenominator() : Error("denominator has zero constant term") {}
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("series has zero constant term and is not invertible") {}
};

class ConstantTermNotOne : public Error {
public:
    ConstantTermNotOne() : Error("logarithm requires constant term 1") {}
};

class NegativeExponent : public Error {
public:
    explicit NegativeExponent(std::size_t n)
        : Error("negative exponent c_" + std::to_string(n) + " in product identity"), index(n) {}
    std::size_t index;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

// ---- group-spec ------------------------------------------------------------

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

class ArityError : public Error {
public:
    ArityError(const std::string& what, std::size_t pos)
        : Error("bad argument at position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class PrimeMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RankOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// ---- dimension-engine ------------------------------------------------------

/// Raised when a series cannot be the Hilbert-Poincare series of any group.
class IntegralityError : public Error {
public:
    IntegralityError(const std::string& what, std::size_t n) : Error(what), index(n) {}
    std::size_t index;
};

class NonIntegralW : public IntegralityError {
public:
    explicit NonIntegralW(std::size_t n)
        : IntegralityError("w_" + std::to_string(n) + " is not an integer", n) {}
};

class NegativeDimension : public IntegralityError {
public:
    explicit NegativeDimension(std::size_t n)
        : IntegralityError("c_" + std::to_string(n) + " is negative", n) {}
};

class UnsupportedSpec : public Error {
public:
    using Error::Error;
};

// ---- finite-oracle ---------------------------------------------------------

class TooLarge : public Error {
public:
    using Error::Error;
};

} // namespace zass
