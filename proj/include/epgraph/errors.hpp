#pragma once

#include <stdexcept>
#include <string>

namespace epg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Cayley table failed the group axioms (Latin square, associativity,
// identity or inverses).
class NotAGroup : public Error {
 public:
  using Error::Error;
};

// Closure or product would exceed the configured order cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

// Family builder asked for an out-of-range parameter.
class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

class NotAPGroup : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

// Proper graph of the one-element group does not exist.
class TrivialGroup : public Error {
 public:
  using Error::Error;
};

class SameVertex : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A hypothesis-gated check was invoked outside its hypothesis.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace epg
