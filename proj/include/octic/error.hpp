#pragma once

#include <stdexcept>
#include <string>

namespace octic {

// Failure kinds surfaced in reports and exit codes.  Pipeline stages that
// produce verdict records catch OcticError and encode it instead of
// unwinding out of the run.
enum class Err {
  Parse,
  IO,
  Invalid,
  DegeneratePlane,
  DuplicatePlanes,
  NotProportional,
  Degenerate,
  PoleAtPoint,
  NotInvolution,
  IrrationalNormalization,
  IdentityMap,
  NotPreserved,
  UScalingMismatch,
  FixedPointMismatch,
  IntertwiningFailure,
  BadReduction,
  BoundViolation,
  InsufficientPrimes,
  NonIntegerFit,
};

const char* err_name(Err e);

struct OcticError : std::runtime_error {
  Err kind;
  OcticError(Err k, const std::string& msg)
      : std::runtime_error(std::string(err_name(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(Err k, const std::string& msg) {
  throw OcticError(k, msg);
}

}  // namespace octic
