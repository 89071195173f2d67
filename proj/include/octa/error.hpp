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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace octa {

enum class Errc {
  // Caller supplied something invalid.
  ParityViolation,
  InvalidHeight,
  UnknownFamily,
  BadParameters,
  ApexNotAbove,
  PointBelowSurface,
  DivisionByZero,
  NegativePowerOfZero,
  SizeLimitExceeded,
  NotASubgraph,
  InvalidSplitSite,
  FaceNotRenewable,
  NotALocalMinimum,
  SimplifyingAssumptionViolated,
  NotAMatching,
  WindowTooSmall,
  CollarTooThin,
  ScanBoundExceeded,
  Parse,
  // Arithmetic result that may be either.
  DivisionNotExact,
  NonIntegerStep,
  // A claimed invariant failed.
  IdentityViolated,
  InconsistentExponents,
  PathInconsistency,
  NonIntegerX,
  NoLocalMinimum,
  InvariantViolation,
};

std::string_view errc_name(Errc code);

// True for codes that indicate a broken invariant rather than bad input.
bool is_invariant_violation(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace octa
