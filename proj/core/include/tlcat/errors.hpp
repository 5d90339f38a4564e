#pragma once

#include <stdexcept>
#include <string>

namespace tlcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Inverting something that is not a monomial in the spectral variables.
class NotInvertibleInRing : public Error {
 public:
  using Error::Error;
};

class PoleAtSpecialization : public Error {
 public:
  using Error::Error;
};

class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotScalarAction : public Error {
 public:
  using Error::Error;
};

class EigenvalueMismatch : public Error {
 public:
  using Error::Error;
};

class AmbiguousEigenvalue : public Error {
 public:
  using Error::Error;
};

}  // namespace tlcat
