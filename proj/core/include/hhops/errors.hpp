#pragma once

#include <stdexcept>
#include <string>

namespace hhops {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (index out of range, bad order, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Element whose grading bookkeeping is inconsistent.
class MalformedElement : public Error {
 public:
  using Error::Error;
};

// A generator occurring in an element has no image under a map.
class UnboundGenerator : public Error {
 public:
  using Error::Error;
};

// A map that does not respect degrees.
class MalformedMap : public Error {
 public:
  using Error::Error;
};

// Two generators with the same name in one object.
class NamingError : public Error {
 public:
  using Error::Error;
};

class MalformedSplice : public Error {
 public:
  using Error::Error;
};

// A configured enumeration bound was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

// A defining system lacks an entry needed for an obstruction.
class IncompleteSystem : public Error {
 public:
  using Error::Error;
};

// Text that does not match the element grammar or the resolution spec format.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hhops
