#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexsense {

enum class ErrorCode {
  Io = 1,
  Parse,
  Domain,
  UnknownWord,
  Contract,
  Refused,
  Consistency,
  InvalidArgument,
};

// Base of every exception thrown by the library. The C API maps code() onto
// its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

// Malformed input. line() is 1-based; for record-oriented formats it is the
// record number.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(const std::string& what)
      : Error(ErrorCode::UnknownWord, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(ErrorCode::Contract, what) {}
};

class RefusedError : public Error {
 public:
  explicit RefusedError(const std::string& what) : Error(ErrorCode::Refused, what) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorCode::Consistency, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

}  // namespace lexsense
