#pragma once

#include <stdexcept>
#include <string>

namespace gpbc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
  using Error::Error;
};
class OverflowError : public Error {
  using Error::Error;
};
class EndpointError : public Error {
  using Error::Error;
};
class LimitExceeded : public Error {
  using Error::Error;
};
class SameVertexError : public Error {
  using Error::Error;
};
class OverlapError : public Error {
  using Error::Error;
};
class MembershipError : public Error {
  using Error::Error;
};
class DisconnectedError : public Error {
  using Error::Error;
};
class DomainError : public Error {
  using Error::Error;
};
class ParseError : public Error {
  using Error::Error;
};

}  // namespace gpbc
