#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prequential {

// Input or model values that violate a documented precondition.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NonstationaryModelError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class IndexOutOfRangeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class SeriesTooShortError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DegenerateInputError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class EmptyResultsError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Config document problem; `key()` names the offending entry when known.
class ConfigError : public ValidationError {
public:
  ConfigError(std::string key, const std::string &message)
      : ValidationError(key.empty() ? message : key + ": " + message),
        key_(std::move(key)) {}

  const std::string &key() const noexcept { return key_; }

private:
  std::string key_;
};

// Failure inside a single Monte Carlo replication.
class ReplicationError : public std::runtime_error {
public:
  ReplicationError(std::size_t rep_id, const std::string &message)
      : std::runtime_error("replication " + std::to_string(rep_id) + ": " +
                           message),
        rep_id_(rep_id) {}

  std::size_t rep_id() const noexcept { return rep_id_; }

private:
  std::size_t rep_id_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace prequential
