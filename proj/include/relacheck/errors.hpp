#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relacheck {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structurally malformed value; carries the offending field name.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// An enumeration request above the configured bound.
class SizeLimitError : public Error {
 public:
  SizeLimitError(std::size_t bound, std::size_t actual)
      : Error("input size " + std::to_string(actual) +
              " exceeds enumeration bound " + std::to_string(bound)),
        bound_(bound),
        actual_(actual) {}

  std::size_t bound() const { return bound_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t bound_;
  std::size_t actual_;
};

// A cyclic graph where a DAG was required; the message names a cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A bounded search exhausted its space without a witness.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// An external candidate process could not be launched at all.
// Distinct from per-case ERROR verdicts.
class LaunchError : public Error {
 public:
  using Error::Error;
};

// Rejection patterns from different problems mixed into one report.
class AggregationError : public Error {
 public:
  using Error::Error;
};

}  // namespace relacheck
