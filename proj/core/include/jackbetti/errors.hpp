#pragma once

#include <stdexcept>
#include <string>

namespace jb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: parse failures, size mismatches, out-of-range parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public InvalidInput {
 public:
  ZeroDenominator() : InvalidInput("zero denominator") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class IndeterminateError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParameterOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class MalformedDiagram : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class MultipleBeadsOnRunner : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonlinearDivisor : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SingularMatrix : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ZeroEigenvalueGap : public Error {
 public:
  using Error::Error;
};

class NotComparable : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The requested Jack polynomial has a pole at the specialized parameter along
// every recursion path the engine can find.
class NotWellDefined : public Error {
 public:
  using Error::Error;
};

// No recursion path avoids a non-semisimple step.
class BlockedByPole : public NotWellDefined {
 public:
  using NotWellDefined::NotWellDefined;
};

class AdmissibilityFailure : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegreeTooSmall : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegreeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NotContained : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class RegimeViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class CertificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace jb
