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

#include "bigint.hpp"

#include <limits>
#include <numeric>

namespace gfx {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multinomial(std::int64_t n, std::span<const int> parts) {
  if (n < 0) return 0;
  BigInt result = 1;
  std::int64_t remaining = n;
  for (int part : parts) {
    if (part < 0 || part > remaining) return 0;
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

std::uint64_t to_u64_saturating(const BigInt& v) {
  if (v <= 0) return 0;
  if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return v.convert_to<std::uint64_t>();
}

}  // namespace gfx
