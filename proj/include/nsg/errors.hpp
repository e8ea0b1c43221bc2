#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Generator list was empty.
class EmptyGenerators : public Error {
 public:
  EmptyGenerators() : Error("generator list is empty") {}
};

/// gcd of the generators is not 1, so the complement would be infinite.
class NotCofinite : public Error {
 public:
  explicit NotCofinite(long long gcd)
      : Error("generators have gcd " + std::to_string(gcd) +
              "; the semigroup would not be cofinite"),
        gcd_(gcd) {}
  long long gcd() const { return gcd_; }

 private:
  long long gcd_;
};

/// The complement of the given gap set is not closed under addition.
/// Carries a witness pair of members whose sum is a gap.
class NotClosed : public Error {
 public:
  NotClosed(int x, int y)
      : Error("complement is not additively closed: " + std::to_string(x) +
              " + " + std::to_string(y) + " = " + std::to_string(x + y) +
              " is a gap"),
        x_(x),
        y_(y) {}
  int x() const { return x_; }
  int y() const { return y_; }

 private:
  int x_, y_;
};

/// Operation is undefined for the full semigroup N (conductor 0).
class UndefinedForNaturals : public Error {
 public:
  explicit UndefinedForNaturals(const std::string& op)
      : Error(op + " is undefined for the full semigroup N") {}
};

/// Profile-based counting formulas require depth q >= 2.
class FormulaDomain : public Error {
 public:
  explicit FormulaDomain(int q)
      : Error("formula requires depth q >= 2, got q = " + std::to_string(q)) {}
};

/// Membership window [0, c+m) would exceed the supported bound (2^31).
class WindowLimit : public Error {
 public:
  using Error::Error;
};

/// Requested bound exceeds the configured memory / capacity guard.
class BoundTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidNotation : public Error {
 public:
  using Error::Error;
};

/// Predicate text failed to parse; carries position and offending token.
class PredicateParse : public Error {
 public:
  PredicateParse(std::size_t position, std::string token, const std::string& what_failed)
      : Error("predicate error at position " + std::to_string(position) + " near '" +
              token + "': " + what_failed),
        position_(position),
        token_(std::move(token)) {}
  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint file failed its integrity check.
class CorruptCheckpoint : public Error {
 public:
  using Error::Error;
};

/// Checkpoint was produced by a different configuration (bound/laws/predicate).
class CheckpointMismatch : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same invariant disagreed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what_failed)
      : std::logic_error("internal inconsistency: " + what_failed) {}
};

}  // namespace nsg
