#pragma once

#include <stdexcept>
#include <string>

namespace bb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid (n, t, b) combination, bad grid, unknown flag value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A strategy or the driver broke the (t, b) contract. Never recoverable.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class StreamExhausted : public Error {
 public:
  using Error::Error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class UnsupportedPattern : public Error {
 public:
  using Error::Error;
};

// Oracle input above its hard size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace bb
