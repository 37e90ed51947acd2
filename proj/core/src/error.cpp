#include "eolab/error.hpp"

#include <utility>

namespace eolab {

DuplicateElement::DuplicateElement(std::uint64_t value, std::size_t first,
                                   std::size_t second)
    : InvalidArgument("duplicate element " + std::to_string(value) +
                      " at positions " + std::to_string(first) + " and " +
                      std::to_string(second)),
      value_(value),
      first_(first),
      second_(second) {}

LengthMismatch::LengthMismatch(std::size_t left, std::size_t right)
    : InvalidArgument("length mismatch: " + std::to_string(left) + " vs " +
                      std::to_string(right)),
      left_(left),
      right_(right) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(position == npos
                ? message
                : message + " (at offset " + std::to_string(position) + ")"),
      position_(position),
      detail_(message) {}

EvaluationError::EvaluationError(const std::string& message,
                                 std::uint64_t input, std::string expression)
    : Error(message + " at i=" + std::to_string(input) + " in \"" +
            expression + "\""),
      input_(input),
      expression_(std::move(expression)) {}

InsufficientEnumeration::InsufficientEnumeration(const std::string& program,
                                                 std::size_t emitted,
                                                 std::size_t required)
    : Error("insufficient enumeration: program \"" + program + "\" emitted " +
            std::to_string(emitted) + " of " + std::to_string(required) +
            " required elements within the round cap"),
      emitted_(emitted),
      required_(required) {}

}  // namespace eolab
