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

#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfx {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// binom(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// n! / (k_1! ... k_s! (n - sum k)!); zero when sum k > n or n < 0.
BigInt multinomial(std::int64_t n, std::span<const int> parts);

BigInt ipow(const BigInt& base, std::uint64_t exp);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Saturating conversion used for budget checks.
std::uint64_t to_u64_saturating(const BigInt& v);

}  // namespace gfx
