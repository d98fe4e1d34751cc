#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schedalg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A bound that does not fit the shape of its type.
class BoundError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Types outside the supported fragment, e.g. an implication whose antecedent
// has an infinite bound space.
class UnsupportedType : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation required a narrower type class (boolean, pure, elementary).
class ClassError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ControlMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace schedalg
