// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace horolamp {

// A request needed a multiplicative inverse that does not exist.
class NotInvertible : public std::runtime_error {
public:
  NotInvertible(const std::string& element, const std::string& ring)
      : std::runtime_error(element + " is not invertible in " + ring),
        element_(element), ring_(ring) {}
  const std::string& element() const { return element_; }
  const std::string& ring() const { return ring_; }

private:
  std::string element_, ring_;
};

// Malformed textual input (words, ring names, JSON payloads).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(0) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A vertex payload that does not describe a point of the horocyclic product.
class InvalidVertex : public std::runtime_error {
public:
  explicit InvalidVertex(const std::string& why) : std::runtime_error(why) {}
};

// Requested functionality outside the supported parameter range.
class NotSupported : public std::runtime_error {
public:
  explicit NotSupported(const std::string& why) : std::runtime_error(why) {}
};

}  // namespace horolamp
