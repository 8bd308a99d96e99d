#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordseason {

// Base of every error thrown by the library. Callers that only care about
// "bad input vs. bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A CSV file does not match the requested schema. row() is 1-based over data
// rows (the header is row 0).
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::size_t row = 0);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

// A data row that is well formed but not admissible (e.g. a weekend date in
// daily equity data).
class RejectedRow : public Error {
 public:
  RejectedRow(const std::string& what, std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class DegenerateSeries : public Error {
 public:
  using Error::Error;
};

// Observed frequency of 0 or 1, for which the normal approximation of the
// binomial test divides by zero.
class DegenerateFrequency : public Error {
 public:
  using Error::Error;
};

}  // namespace ordseason
