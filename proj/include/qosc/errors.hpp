#ifndef QOSC_ERRORS_HPP
#define QOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qosc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (CLI exit code 1).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class QOutOfRange : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class AlphaZero : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class InvalidLabel : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// 2*alpha*gamma*exp(-i*pi*nu0) is not real for the given gamma.
class NonRealB : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class InvalidWindow : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// Finite families have a fixed dimension (1 or 2).
class DimensionMismatch : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class NotUnbounded : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// The label admits no irreducible representation (CLI exit code 2).
class NoRepresentation : public Error {
  public:
    using Error::Error;
};

/// A lambda value inside the requested window is negative beyond tolerance.
class NegativeLambda : public NoRepresentation {
  public:
    using NoRepresentation::NoRepresentation;
};

/// Spectrum evaluation left the range of double.
class SpectrumOverflow : public Error {
  public:
    using Error::Error;
};

} // namespace qosc

#endif // QOSC_ERRORS_HPP
