#pragma once

#include <stdexcept>
#include <string>

namespace rmab {

// Base for every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// A reward candidate cannot be simulated (evaluation blew up on some arm).
class CandidateInvalidError : public Error {
 public:
  using Error::Error;
};

class ProviderError : public Error {
 public:
  using Error::Error;
};

// Scripted provider ran out of matching responses; almost always a test bug.
class ScriptUnderrunError : public ProviderError {
 public:
  using ProviderError::ProviderError;
};

class SearchFailedError : public Error {
 public:
  using Error::Error;
};

class ReportError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmab
