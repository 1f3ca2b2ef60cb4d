#pragma once

#include <stdexcept>
#include <string>

namespace distilkit {

// Error taxonomy maps onto CLI exit codes: config -> 2, data -> 3, io -> 4.
// DomainError marks contract violations on library calls (bad shapes,
// non-finite input) and is treated as a config error at the CLI boundary.

class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public DataError {
public:
  explicit ParseError(const std::string& msg) : DataError(msg) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace distilkit
