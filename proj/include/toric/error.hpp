#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

class InvalidConeError : public InputError {
public:
    using InputError::InputError;
};

class EffectivityError : public InputError {
public:
    using InputError::InputError;
};

class RangeError : public InputError {
public:
    using InputError::InputError;
};

// Well-formed input that violates an operation's precondition (CLI exit code 3).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ContainmentError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DegeneratePairingError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnboundedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

}  // namespace toric
