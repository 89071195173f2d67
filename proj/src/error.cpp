// Copyright 2026 The Octa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "octa/error.hpp"

namespace octa {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::InvalidHeight: return "InvalidHeight";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ApexNotAbove: return "ApexNotAbove";
    case Errc::PointBelowSurface: return "PointBelowSurface";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NegativePowerOfZero: return "NegativePowerOfZero";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotASubgraph: return "NotASubgraph";
    case Errc::InvalidSplitSite: return "InvalidSplitSite";
    case Errc::FaceNotRenewable: return "FaceNotRenewable";
    case Errc::NotALocalMinimum: return "NotALocalMinimum";
    case Errc::SimplifyingAssumptionViolated: return "SimplifyingAssumptionViolated";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::CollarTooThin: return "CollarTooThin";
    case Errc::ScanBoundExceeded: return "ScanBoundExceeded";
    case Errc::Parse: return "Parse";
    case Errc::DivisionNotExact: return "DivisionNotExact";
    case Errc::NonIntegerStep: return "NonIntegerStep";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::InconsistentExponents: return "InconsistentExponents";
    case Errc::PathInconsistency: return "PathInconsistency";
    case Errc::NonIntegerX: return "NonIntegerX";
    case Errc::NoLocalMinimum: return "NoLocalMinimum";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_invariant_violation(Errc code) {
  switch (code) {
    case Errc::DivisionNotExact:
    case Errc::IdentityViolated:
    case Errc::InconsistentExponents:
    case Errc::PathInconsistency:
    case Errc::NonIntegerX:
    case Errc::NoLocalMinimum:
    case Errc::InvariantViolation:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace octa
