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

#include <compare>
#include <cstdint>
#include <string>

namespace ncsim {

/// Name prefix (n, g): a content object name plus a generation id. The unit
/// of requesting, caching and popularity accounting.
struct NamePrefix {
  std::string object;
  std::uint32_t generation = 0;

  auto operator<=>(const NamePrefix&) const = default;

  std::string str() const {
    return object + "#" + std::to_string(generation);
  }
};

}  // namespace ncsim
