#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simrouge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid method/preprocessing combinations and bad parameters. The CLI maps
// these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed input files. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidN : public ConfigError {
 public:
  explicit InvalidN(int n) : ConfigError("n-gram order must be >= 1, got " + std::to_string(n)) {}
};

class MismatchedN : public ConfigError {
 public:
  MismatchedN(int a, int b)
      : ConfigError("n-gram orders differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class MissingLexicon : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidCombination : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class StemmingIncompatible : public ConfigError {
 public:
  StemmingIncompatible() : ConfigError("WordNet measures cannot score stemmed sentences") {}
};

class MissingFile : public InputError {
 public:
  explicit MissingFile(const std::string& path) : InputError("missing file: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateId : public InputError {
 public:
  explicit DuplicateId(const std::string& id) : InputError("duplicate id: " + id) {}
};

class LengthMismatch : public InputError {
 public:
  LengthMismatch(std::size_t a, std::size_t b)
      : InputError("lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

}  // namespace simrouge
