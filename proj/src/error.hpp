// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
#pragma once

#include <exception>
#include <string>

namespace qgeo {

// Engine-wide status codes. Mirrored one-to-one by the C API's qgeo_status.
enum class Err : int {
  Ok = 0,
  DivisionByZero = 1,
  Pole = 2,              // denominator vanishes under a substitution/limit
  BudgetExceeded = 3,    // rewrite step budget exhausted
  Parse = 4,             // DSL / expression / JSON input rejected
  InvalidArgument = 5,
  NotAGroup = 6,
  NotAFactorisation = 7,
  Dimension = 8,
  Construction = 9,      // an algebraic object failed its build-time checks
  NotBiinvertible = 10,
  YbeFailure = 11,
  UnknownModel = 12,
  UnknownCheck = 13,
  Io = 14,
  Internal = 15,
  BoundExceeded = 16,  // input size exceeds a configured enumeration bound
};

class Error : public std::exception {
 public:
  Error(Err code, std::string message) : code_(code), message_(std::move(message)) {}
  Err code() const { return code_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  Err code_;
  std::string message_;
};

[[noreturn]] void fail(Err code, const std::string& message);

const char* err_name(Err code);

}  // namespace qgeo
