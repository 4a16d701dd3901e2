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

#include "ncsim/catalog.hpp"

#include <stdexcept>

namespace ncsim {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::string ContentLibrary::object_name(int video, int segment, const std::string& rep) {
  return "v" + std::to_string(video) + "/s" + std::to_string(segment) + "/" + rep;
}

ContentLibrary ContentLibrary::build(const LibraryConfig& cfg) {
  if (cfg.videos <= 0 || cfg.segments <= 0 || cfg.payload_bytes <= 0 ||
      cfg.representations.empty())
    throw std::invalid_argument("catalog: empty library configuration");

  ContentLibrary lib;
  lib.cfg_ = cfg;

  for (const Representation& rep : cfg.representations) {
    if (rep.packets <= 0 || rep.generations <= 0)
      throw std::invalid_argument("catalog: representation '" + rep.name +
                                  "' needs at least one packet and one generation");
    if (rep.packets < rep.generations)
      throw std::invalid_argument("catalog: representation '" + rep.name +
                                  "' has fewer packets than generations");
  }

  for (int v = 0; v < cfg.videos; ++v) {
    for (int s = 0; s < cfg.segments; ++s) {
      for (const Representation& rep : cfg.representations) {
        const std::string object = object_name(v, s, rep.name);
        // Near-even split: the first (packets mod generations) generations
        // take ceil(packets/generations), the rest take the floor, so the
        // final generation is the smaller one.
        const std::size_t packets = static_cast<std::size_t>(rep.packets);
        const std::size_t gens = static_cast<std::size_t>(rep.generations);
        const std::size_t base = packets / gens;
        const std::size_t extra = packets % gens;
        std::vector<GenerationSpec> specs;
        specs.reserve(gens);
        for (std::size_t g = 0; g < gens; ++g) {
          GenerationSpec spec;
          spec.prefix = NamePrefix{object, static_cast<std::uint32_t>(g)};
          spec.size = base + (g < extra ? 1 : 0);
          spec.payload_bytes = static_cast<std::size_t>(cfg.payload_bytes);
          lib.total_packets_ += spec.size;
          lib.specs_.emplace(spec.prefix, spec);
          specs.push_back(std::move(spec));
        }
        lib.by_object_.emplace(object, std::move(specs));
      }
    }
  }
  return lib;
}

const GenerationSpec& ContentLibrary::generation(const NamePrefix& prefix) const {
  auto it = specs_.find(prefix);
  if (it == specs_.end())
    throw std::out_of_range("catalog: unknown prefix " + prefix.str());
  return it->second;
}

const std::vector<GenerationSpec>& ContentLibrary::object_generations(
    const std::string& object) const {
  auto it = by_object_.find(object);
  if (it == by_object_.end())
    throw std::out_of_range("catalog: unknown object " + object);
  return it->second;
}

std::vector<std::uint8_t> ContentLibrary::source_payload(const NamePrefix& prefix,
                                                         std::size_t index) const {
  const GenerationSpec& spec = generation(prefix);
  if (index >= spec.size)
    throw std::out_of_range("catalog: packet index outside generation");
  std::uint64_t state = fnv1a(prefix.object) ^
                        (0x9E3779B97F4A7C15ull * (prefix.generation + 1)) ^
                        (0xC2B2AE3D27D4EB4Full * (index + 1));
  std::vector<std::uint8_t> out(spec.payload_bytes);
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = splitmix(state);
    for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(word & 0xFF);
      word >>= 8;
    }
  }
  return out;
}

}  // namespace ncsim
