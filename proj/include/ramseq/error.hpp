#pragma once

#include <stdexcept>
#include <string>

namespace ramseq {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (unknown label, bad probability, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A set or universe exceeds the enumeration bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A query needs a menu the attention rule does not define.
class IncompletenessError : public Error {
 public:
  using Error::Error;
};

/// Random rule construction could not satisfy its constraints.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Unknown named form, hypothesis, uplift model, etc.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramseq
