#pragma once

#include <stdexcept>
#include <string>

namespace pizza {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// A division that was required to be exact left a nonzero remainder.
class NonDivisible : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class OnHyperplane : public Error {
 public:
  using Error::Error;
};

// The requested (family, degree) lies outside the regime where Z_d is defined.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

// Refusal to start a computation that would exceed the configured caps.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DivergentRegion : public Error {
 public:
  using Error::Error;
};

class ToleranceNotReached : public Error {
 public:
  using Error::Error;
};

class RewriteFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pizza
