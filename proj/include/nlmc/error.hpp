#pragma once

#include <stdexcept>
#include <string>

namespace nlmc {

// Bad arguments or a violated precondition (CLI exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource limit would be exceeded (CLI exit code 3).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; messages carry "line N:" prefixes (CLI exit code 4).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nlmc
