#pragma once

#include <stdexcept>
#include <string>

namespace padiff {

/// Malformed input text or schema violation in a file.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated precondition.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check that should hold by construction failed; indicates a bug.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace padiff
