#pragma once

#include <stdexcept>
#include <string>

namespace umlmeter {

// Common base so callers (notably the CLI) can map failures onto the
// documented exit-code table.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- Input document failures (CLI exit code 2) -----------------------------

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The document is XML but carries no recognizable XMI root.
class NotXmi : public Error {
 public:
  using Error::Error;
};

// --- Model failures (CLI exit code 3) --------------------------------------

// The ingested model violates a structural invariant, e.g. a cyclic
// generalization hierarchy.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class WrongElementKind : public Error {
 public:
  using Error::Error;
};

// --- Configuration failures (CLI exit code 4) ------------------------------

class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidAnnotation : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidRuleset : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidFilter : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DslParseError : public ConfigError {
 public:
  DslParseError(const std::string& message, int line, int column)
      : ConfigError(message + " at line " + std::to_string(line) +
                    ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class UnresolvedMetric : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class CyclicDefinition : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// --- Evaluation / reporting failures (CLI exit code 4) ---------------------

class ScopeError : public Error {
 public:
  using Error::Error;
};

class NoData : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

// The use-case filter selected nothing (dedicated CLI exit code 6).
class NothingToEstimate : public Error {
 public:
  using Error::Error;
};

}  // namespace umlmeter
