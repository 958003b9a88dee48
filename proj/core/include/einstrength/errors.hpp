#pragma once

#include <stdexcept>
#include <string>

namespace einstrength {

// Exit codes used by the command-line tool.
enum class ExitCode : int {
  Ok = 0,
  Parse = 1,
  Unsupported = 2,
  Mismatch = 3,
  ResourceGuard = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode code() const { return ExitCode::Parse; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }
  ExitCode code() const override { return ExitCode::Parse; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0 && column <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  int line_;
  int column_;
};

class UnsupportedSystem : public Error {
 public:
  using Error::Error;
  ExitCode code() const override { return ExitCode::Unsupported; }
};

class ResourceGuard : public Error {
 public:
  using Error::Error;
  ExitCode code() const override { return ExitCode::ResourceGuard; }
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace einstrength
