#pragma once

#include <stdexcept>
#include <string>

namespace skinning {

// Base class for all domain-rule violations raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// 2g-2+n <= 0: not a finite-area hyperbolic surface type.
class NonHyperbolicError : public Error {
public:
    using Error::Error;
};

// Systole outside (0, 2*arcsinh(1)].
class SystoleOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Epsilon outside (0, arcsinh(1)].
class EpsilonOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Collar offset s exceeds the half-width w.
class OffsetExceedsWidthError : public Error {
public:
    using Error::Error;
};

// kappa = 0 (the (0,3) surface): the contraction constant divides by kappa.
class KappaZeroError : public Error {
public:
    using Error::Error;
};

// Generic precondition violation (non-finite input, argument out of range).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed tower-number string.
class ParseError : public Error {
public:
    using Error::Error;
};

// Filesystem failure (unwritable output path and the like).
class IoError : public Error {
public:
    using Error::Error;
};

// A runtime check that should hold for every admitted input failed; a bug signal.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace skinning
