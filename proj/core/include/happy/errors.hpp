#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace happy {

// A caller broke an operation's documented precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The solver declines to run: the instance is outside what it will attempt
// (enumeration budget, q > max degree).
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Refusal {
 public:
  BudgetExceeded(std::string what, long double required)
      : Refusal(std::move(what)), required_(required) {}

  long double required() const { return required_; }

 private:
  long double required_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(message + " at line " + std::to_string(line)),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace happy
