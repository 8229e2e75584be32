#include "octic/error.hpp"

namespace octic {

const char* err_name(Err e) {
  switch (e) {
    case Err::Parse: return "ParseError";
    case Err::IO: return "IOError";
    case Err::Invalid: return "InvalidInput";
    case Err::DegeneratePlane: return "DegeneratePlane";
    case Err::DuplicatePlanes: return "DuplicatePlanes";
    case Err::NotProportional: return "NotProportional";
    case Err::Degenerate: return "Degenerate";
    case Err::PoleAtPoint: return "PoleAtPoint";
    case Err::NotInvolution: return "NotInvolution";
    case Err::IrrationalNormalization: return "IrrationalNormalization";
    case Err::IdentityMap: return "IdentityMap";
    case Err::NotPreserved: return "NotPreserved";
    case Err::UScalingMismatch: return "UScalingMismatch";
    case Err::FixedPointMismatch: return "FixedPointMismatch";
    case Err::IntertwiningFailure: return "IntertwiningFailure";
    case Err::BadReduction: return "BadReduction";
    case Err::BoundViolation: return "BoundViolation";
    case Err::InsufficientPrimes: return "InsufficientPrimes";
    case Err::NonIntegerFit: return "NonIntegerFit";
  }
  return "UnknownError";
}

}  // namespace octic
