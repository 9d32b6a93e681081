#pragma once

#include <stdexcept>
#include <string>

namespace cubegroup {

/// Malformed textual input (cycle notation, move words, group descriptions).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands of incompatible degree or shape.
class DegreeMismatch : public std::invalid_argument {
 public:
  explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A sticker assignment whose cubelets cannot be identified.
class CorruptedState : public std::runtime_error {
 public:
  explicit CorruptedState(const std::string& what) : std::runtime_error(what) {}
};

/// A cube state that is a valid arrangement of cubelets but lies outside the group.
class NotInGroup : public std::runtime_error {
 public:
  explicit NotInGroup(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubegroup
