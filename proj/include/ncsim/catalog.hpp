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
#include <map>
#include <string>
#include <vector>

#include "ncsim/name.hpp"

namespace ncsim {

/// One rung of the bitrate ladder.
struct Representation {
  std::string name;          // e.g. "480p"
  int bitrate_kbps = 0;      // nominal media bitrate used by adaptation
  int packets = 0;           // Data packets per segment at this quality
  int generations = 0;       // coding generations those packets split into
};

struct LibraryConfig {
  int videos = 0;
  int segments = 0;                       // per video
  int payload_bytes = 1250;               // per Data packet
  double segment_seconds = 2.0;           // playback duration per segment
  std::vector<Representation> representations;
};

struct GenerationSpec {
  NamePrefix prefix;
  std::size_t size = 0;           // packets coded together
  std::size_t payload_bytes = 0;  // uniform within the generation
};

/// The packetized content library: every (video, segment, representation)
/// becomes one object, split into generations of near-equal size. Immutable
/// after construction.
class ContentLibrary {
 public:
  /// Enumerates every generation. Throws std::invalid_argument on a config
  /// with zero packets, zero generations, or fewer packets than generations
  /// in any representation.
  static ContentLibrary build(const LibraryConfig& cfg);

  const LibraryConfig& config() const { return cfg_; }

  /// Total Data packets across the whole library.
  std::size_t total_packets() const { return total_packets_; }

  /// Lookup of one generation. Throws std::out_of_range for unknown prefixes.
  const GenerationSpec& generation(const NamePrefix& prefix) const;

  bool has(const NamePrefix& prefix) const { return specs_.count(prefix) != 0; }

  static std::string object_name(int video, int segment, const std::string& rep);

  /// All generations of one object, in generation order.
  const std::vector<GenerationSpec>& object_generations(const std::string& object) const;

  /// Payload bits of a whole segment at the given representation.
  std::int64_t segment_payload_bits(const Representation& rep) const {
    return static_cast<std::int64_t>(rep.packets) * cfg_.payload_bytes * 8;
  }

  /// Deterministic pseudorandom payload of source packet `index` within the
  /// generation. Seeded by the prefix, so decoded output can be verified
  /// anywhere without shipping media bytes.
  std::vector<std::uint8_t> source_payload(const NamePrefix& prefix,
                                           std::size_t index) const;

 private:
  LibraryConfig cfg_;
  std::size_t total_packets_ = 0;
  std::map<NamePrefix, GenerationSpec> specs_;
  std::map<std::string, std::vector<GenerationSpec>> by_object_;
};

}  // namespace ncsim
