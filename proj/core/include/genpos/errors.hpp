#pragma once

#include <stdexcept>
#include <string>

namespace genpos {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class MalformedGraph6Error : public Error {
 public:
  using Error::Error;
};

class NoSuchVertexError : public Error {
 public:
  using Error::Error;
};

class NoSuchEdgeError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class BadParametersError : public Error {
 public:
  using Error::Error;
};

class NotGeneralPositionError : public Error {
 public:
  using Error::Error;
};

class GaveUpError : public Error {
 public:
  using Error::Error;
};

class BadInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace genpos
