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

#include "ncsim/gf256.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace ncsim::gf256 {

namespace {

struct Tables {
  std::array<std::uint8_t, 256> log{};
  std::array<std::uint8_t, 512> exp{};
  // Flat 256x256 product table. 64 KiB, stays hot in cache during row ops.
  std::array<std::uint8_t, 65536> mul{};

  Tables() {
    // Walk the powers of the generator 0x03: x*3 = (x*2) ^ x, where *2 is a
    // shift with conditional reduction by 0x11B.
    std::uint8_t x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[static_cast<std::size_t>(i)] = x;
      log[x] = static_cast<std::uint8_t>(i);
      const std::uint8_t x2 = static_cast<std::uint8_t>(
          (x << 1) ^ ((x & 0x80) ? (kReductionPoly & 0xFF) : 0));
      x = static_cast<std::uint8_t>(x2 ^ x);
    }
    // Doubled antilog table avoids a modulo when summing logs.
    for (int i = 255; i < 512; ++i) exp[static_cast<std::size_t>(i)] = exp[static_cast<std::size_t>(i - 255)];
    for (int a = 1; a < 256; ++a) {
      for (int b = 1; b < 256; ++b) {
        mul[static_cast<std::size_t>((a << 8) | b)] =
            exp[static_cast<std::size_t>(log[static_cast<std::size_t>(a)]) +
                static_cast<std::size_t>(log[static_cast<std::size_t>(b)])];
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  return tables().mul[(static_cast<std::size_t>(a) << 8) | b];
}

std::uint8_t inv(std::uint8_t a) {
  if (a == 0) throw std::domain_error("gf256: zero has no multiplicative inverse");
  const Tables& t = tables();
  return t.exp[static_cast<std::size_t>(255 - t.log[a])];
}

void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
          std::uint8_t a) {
  if (a == 0) return;
  const std::uint8_t* row = &tables().mul[static_cast<std::size_t>(a) << 8];
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
}

void scale(std::span<std::uint8_t> row, std::uint8_t a) {
  if (a == 1) return;
  if (a == 0) {
    for (auto& b : row) b = 0;
    return;
  }
  const std::uint8_t* m = &tables().mul[static_cast<std::size_t>(a) << 8];
  for (auto& b : row) b = m[b];
}

}  // namespace ncsim::gf256
