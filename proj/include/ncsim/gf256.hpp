/*
 * Copyright 2026 The netcodsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <span>

namespace ncsim::gf256 {

/// Reduction polynomial x^8 + x^4 + x^3 + x + 1, the usual choice for GF(2^8).
inline constexpr unsigned kReductionPoly = 0x11B;

/// Generator used to build the log/antilog tables.
inline constexpr std::uint8_t kGenerator = 0x03;

/// Addition (= subtraction) is bitwise XOR.
inline std::uint8_t add(std::uint8_t a, std::uint8_t b) {
  return static_cast<std::uint8_t>(a ^ b);
}

/// Table-driven product. Tables are built once on first use and immutable
/// afterwards, so concurrent readers are safe.
std::uint8_t mul(std::uint8_t a, std::uint8_t b);

/// Multiplicative inverse. Throws std::domain_error for 0.
std::uint8_t inv(std::uint8_t a);

/// dst[i] ^= a * src[i]. The workhorse of every row operation; dst and src
/// must be the same length.
void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
          std::uint8_t a);

/// row[i] = a * row[i].
void scale(std::span<std::uint8_t> row, std::uint8_t a);

}  // namespace ncsim::gf256
