#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evt {

// Base for every error raised by the library. Callers that only care about
// "something about the input was wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (probability not in (0,1), return period <= 1, non-positive scale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The sample has no spread (or too few points) to estimate anything.
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

// Observations fall outside the support of a family (e.g. non-positive data
// for Frechet/Weibull).
class SupportError : public Error {
 public:
  using Error::Error;
};

// No family could be fitted to a usable optimum.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class FileNotFound : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t row, const std::string& reason)
      : Error("row " + std::to_string(row) + ": " + reason), row_(row) {}

  [[nodiscard]] std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace evt
