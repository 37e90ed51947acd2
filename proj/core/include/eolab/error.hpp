#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eolab {

// Base for every error raised by the library. The CLI maps each subclass to
// a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public InvalidArgument {
 public:
  DuplicateElement(std::uint64_t value, std::size_t first, std::size_t second);

  std::uint64_t value() const noexcept { return value_; }
  std::size_t first_position() const noexcept { return first_; }
  std::size_t second_position() const noexcept { return second_; }

 private:
  std::uint64_t value_;
  std::size_t first_;
  std::size_t second_;
};

class LengthMismatch : public InvalidArgument {
 public:
  LengthMismatch(std::size_t left, std::size_t right);

  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

// Malformed program text or expression. position is a 0-based byte offset
// into the offending field, or npos when the error is not positional.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(const std::string& message, std::size_t position = npos);

  std::size_t position() const noexcept { return position_; }
  // The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

// Overflow, division by zero or a non-positive cost while evaluating a
// program on a concrete input.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& message, std::uint64_t input,
                  std::string expression);

  std::uint64_t input() const noexcept { return input_; }
  const std::string& expression() const noexcept { return expression_; }

 private:
  std::uint64_t input_;
  std::string expression_;
};

// A dovetail run stopped at its round cap before producing enough elements.
class InsufficientEnumeration : public Error {
 public:
  InsufficientEnumeration(const std::string& program, std::size_t emitted,
                          std::size_t required);

  std::size_t emitted() const noexcept { return emitted_; }
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t emitted_;
  std::size_t required_;
};

// A requested structure does not exist (e.g. an antichain of the asked size).
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace eolab
