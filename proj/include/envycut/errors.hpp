#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace envycut {

// Process exit codes used by the CLI. Each error class maps to one code.
enum class ExitCode : int {
  ok = 0,
  internal = 1,
  schema = 2,
  budget = 3,
  invariant = 4,
  not_envy_free = 5,
  instance_invalid = 6,
  timeout = 7,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const { return ExitCode::internal; }
};

// Precondition violations on arguments (out-of-range endpoints, unsorted
// cube points, cells escaping the simplex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::schema; }
};

// Malformed input files or flags.
class SchemaError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::schema; }
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what), required_(required), budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }
  ExitCode exit_code() const override { return ExitCode::budget; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// An algorithmic invariant failed (both halves even, zero index retained,
// ...). Never raised on valid input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::invariant; }
};

// The instance itself is unusable: Sperner violation, zero density where the
// solver needs a strictly positive one, non-monotone colors, no shout.
class InstanceInvalid : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::instance_invalid; }
};

class Timeout : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::timeout; }
};

}  // namespace envycut
