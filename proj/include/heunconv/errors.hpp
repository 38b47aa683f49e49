#pragma once

#include <stdexcept>
#include <string>

namespace heunconv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The singularity parameter a is zero; the Heun equation has no series solution there.
class NoSolutionError : public Error {
 public:
  NoSolutionError() : Error("no solution at a=0") {}
  explicit NoSolutionError(const std::string& what) : Error(what) {}
};

/// A recurrence denominator vanishes at index n.
class PoleError : public Error {
 public:
  PoleError(long index, const std::string& what) : Error(what), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

/// A Maier variant was evaluated at a point its domain excludes.
class ExcludedPointError : public Error {
 public:
  explicit ExcludedPointError(std::string constraint)
      : Error("excluded point: requires " + constraint), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// |Ā_n| or |B̄_n| reached 1+eps at index n >= N in the dominating-series check.
class PremiseViolation : public Error {
 public:
  PremiseViolation(long index, const std::string& what) : Error(what), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

/// Argument outside an operation's domain (bad sizes, k > n, too few partials, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace heunconv
