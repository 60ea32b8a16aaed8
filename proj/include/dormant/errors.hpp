#pragma once

#include <stdexcept>
#include <string>

namespace dormant {

// Base class for every mathematical failure raised by the library. The CLI
// maps subclasses onto exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (bad prime, wrong order, ...).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotSplit : public Error {
 public:
  NotSplit() : Error("characteristic polynomial does not split over F_p") {}
  using Error::Error;
};

class NonLogPthPower : public Error {
 public:
  using Error::Error;
};

class DegreeBoundViolated : public Error {
 public:
  using Error::Error;
};

class IncompatibleOddPart : public Error {
 public:
  using Error::Error;
};

class MalformedBlocks : public Error {
 public:
  using Error::Error;
};

class NotDormant : public Error {
 public:
  using Error::Error;
};

class ProfileInconsistent : public Error {
 public:
  using Error::Error;
};

class UnexpectedExponents : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  NotAssociative(std::string what, int a, int b, int c)
      : Error(std::move(what)), a_(a), b_(b), c_(c) {}
  // Witness triple, as labels.
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }

 private:
  int a_, b_, c_;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class NonSemisimple : public Error {
 public:
  using Error::Error;
};

class CasimirSingular : public Error {
 public:
  using Error::Error;
};

class NotNearInteger : public Error {
 public:
  using Error::Error;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class ComplexityRefusal : public Error {
 public:
  using Error::Error;
};

}  // namespace dormant
