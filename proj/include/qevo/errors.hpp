// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qevo {

// Base class for all domain errors.  `kind()` is a stable machine-readable
// tag; the CLI prints it verbatim in its "error: <kind>: <message>" lines,
// so renaming a kind is a breaking change.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QEVO_DEFINE_ERROR(NAME)                                        \
  class NAME : public Error {                                          \
   public:                                                             \
    explicit NAME(const std::string& message) : Error(#NAME, message) {} \
  }

QEVO_DEFINE_ERROR(NotHermitian);
QEVO_DEFINE_ERROR(NotUnitary);
QEVO_DEFINE_ERROR(WrongDimension);
QEVO_DEFINE_ERROR(DimensionMismatch);
QEVO_DEFINE_ERROR(ZeroOperator);
QEVO_DEFINE_ERROR(SameRay);
QEVO_DEFINE_ERROR(OrthogonalEndpoints);
QEVO_DEFINE_ERROR(Infeasible);
QEVO_DEFINE_ERROR(StationaryState);
QEVO_DEFINE_ERROR(TracelessPropagator);
QEVO_DEFINE_ERROR(UnknownScenario);
QEVO_DEFINE_ERROR(ParseError);
QEVO_DEFINE_ERROR(IoError);

#undef QEVO_DEFINE_ERROR

}  // namespace qevo
