#pragma once

#include <stdexcept>
#include <string>

namespace crawlbench {

// Bad experiment configuration (unknown key, out-of-range value, ...).
// The CLI maps this family to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input data. The CLI maps this family to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list text; remembers the offending 1-based line.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, long line)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace crawlbench
