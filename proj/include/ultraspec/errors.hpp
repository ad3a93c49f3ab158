#pragma once

#include <stdexcept>
#include <string>

namespace ultraspec {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class PrimeMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// det(A - lambda*M) is identically zero: the pencil has no resolvent anywhere.
class SingularPencil : public Error {
public:
    using Error::Error;
};

/// A structure matrix (B or C) is singular where the family or theorem needs it invertible.
class SingularStructure : public Error {
public:
    using Error::Error;
};

class CommutativityViolated : public Error {
public:
    using Error::Error;
};

class NotInPseudoRegion : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("zero vector") {}
};

/// Simple-root Hensel condition failed; the message records |f'(seed)|_p.
class HenselConditionFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ultraspec
