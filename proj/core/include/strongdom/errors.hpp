#pragma once

#include <stdexcept>
#include <string>

namespace strongdom {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or broken precondition (bad edge, bad parameter, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown identifier (fixture id, theorem name, ...).
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// A cap or budget was exhausted. For solver budgets the best bounds proven
/// so far are carried along (-1 when unknown).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg, long long lower = -1,
                         long long upper = -1)
      : Error(msg), lower_(lower), upper_(upper) {}
  long long lower_bound() const { return lower_; }
  long long upper_bound() const { return upper_; }

 private:
  long long lower_ = -1;
  long long upper_ = -1;
};

}  // namespace strongdom
