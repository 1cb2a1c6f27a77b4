#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distinguo {

/// Violated precondition on a caller-supplied argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input. `offset()` is the byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A configured resource cap (group size, memo entries, search nodes,
/// verification leaves) was hit. Never carries a partial answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace distinguo
