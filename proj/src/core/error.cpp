// Copyright 2026 The gfx Authors
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

#include "error.hpp"

namespace gfx {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "BadArguments";
    case Errc::not_prime_power: return "NotPrimePower";
    case Errc::unsupported: return "Unsupported";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::profile_too_heavy: return "ProfileTooHeavy";
    case Errc::not_a_downset: return "NotADownSet";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_exhaustive: return "NotExhaustive";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gfx
