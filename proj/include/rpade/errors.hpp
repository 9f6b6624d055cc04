#pragma once

#include <stdexcept>
#include <string>

namespace rpade {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Hankel matrix was requested from a series that is too short.
class SeriesLengthError : public Error {
 public:
  using Error::Error;
};

/// Exact mode requested for non-rational data or past the exact-mode cap.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace rpade
