// SPDX-License-Identifier: MIT
// Copyright (c) 2026 qgeo authors
#include "error.hpp"

namespace qgeo {

void fail(Err code, const std::string& message) { throw Error(code, message); }

const char* err_name(Err code) {
  switch (code) {
    case Err::Ok: return "ok";
    case Err::DivisionByZero: return "division-by-zero";
    case Err::Pole: return "pole";
    case Err::BudgetExceeded: return "budget-exceeded";
    case Err::Parse: return "parse-error";
    case Err::InvalidArgument: return "invalid-argument";
    case Err::NotAGroup: return "not-a-group";
    case Err::NotAFactorisation: return "not-a-factorisation";
    case Err::Dimension: return "dimension-mismatch";
    case Err::Construction: return "construction-failed";
    case Err::NotBiinvertible: return "not-biinvertible";
    case Err::YbeFailure: return "ybe-failure";
    case Err::UnknownModel: return "unknown-model";
    case Err::UnknownCheck: return "unknown-check";
    case Err::Io: return "io-error";
    case Err::Internal: return "internal-error";
    case Err::BoundExceeded: return "bound-exceeded";
  }
  return "unknown";
}

}  // namespace qgeo
