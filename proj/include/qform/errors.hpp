#pragma once

#include <stdexcept>
#include <string>

namespace qform {

// Error taxonomy drives the CLI exit codes: parse and validation failures
// exit 1, violated arithmetic invariants (integrality, positivity,
// gcd-constancy, ...) exit 2.
enum class ErrorKind { parse, validation, invariant };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::string file, long line, long column, const std::string& message,
             std::string token)
      : Error(ErrorKind::parse, "ParseError", message),
        file_(std::move(file)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }
  long column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::string file_;
  long line_;
  long column_;
  std::string token_;
};

[[noreturn]] inline void validation_error(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::validation, code, msg);
}

[[noreturn]] inline void invariant_error(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::invariant, code, msg);
}

}  // namespace qform
