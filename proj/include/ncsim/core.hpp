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
#include <random>

namespace ncsim {

/// Simulation time in integer nanoseconds. Integer math keeps event
/// ordering exact and runs reproducible.
using Time = std::int64_t;

using Face = int;
using NodeId = int;

constexpr Time kSecond = 1'000'000'000;

inline Time seconds(double s) { return static_cast<Time>(s * 1e9); }
inline double to_seconds(Time t) { return static_cast<double>(t) / 1e9; }
inline Time millis(double ms) { return static_cast<Time>(ms * 1e6); }

/// Single seeded random source. One instance drives a whole simulation run;
/// every stochastic choice draws from it, so a seed pins the full trace.
/// Distributions are hand-rolled: the standard library leaves their exact
/// output unspecified, which would break cross-toolchain reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform byte, used for coding coefficients.
  std::uint8_t coeff() { return static_cast<std::uint8_t>(eng_() >> 56); }

  /// Uniform index in [0, n). Requires n > 0.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Normal draw via Box-Muller.
  double normal(double mean, double sd);

 private:
  std::mt19937_64 eng_;
};

}  // namespace ncsim
