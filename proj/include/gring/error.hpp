#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gring {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ring, group or element text.
class parse_error : public error {
 public:
  parse_error(const std::string& text, std::size_t position, std::string expected)
      : error("parse error at position " + std::to_string(position) + ": expected " + expected +
              " in '" + text + "'"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// A well-formed description that violates a structural invariant
// (modulus < 2, non-monic polynomial, one-factor product, ...).
class spec_error : public error {
 public:
  using error::error;
};

// An enumeration would exceed the configured element limit.
class limit_error : public error {
 public:
  using error::error;
};

// Elements from different parent rings or group rings were combined.
class mixed_parent_error : public error {
 public:
  using error::error;
};

// An operation was called outside its stated hypotheses.
class precondition_error : public error {
 public:
  using error::error;
};

// The base ring must be reduced for the complement projection.
class not_reduced_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// A constructed object failed its own post-condition check.
class invariant_violation : public error {
 public:
  using error::error;
};

}  // namespace gring
