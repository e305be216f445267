#pragma once

#include <stdexcept>
#include <string>

namespace magnus_lab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

/// Raised by the integral logarithm when a resolvent along the segment
/// [Id, A] is numerically singular, i.e. the spectrum touches (-inf, 0].
class SingularPencil : public Error {
 public:
  using Error::Error;
};

class BadConstantTerm : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class RatioUnreachable : public Error {
 public:
  using Error::Error;
};

class CertificateFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace magnus_lab
