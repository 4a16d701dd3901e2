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

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncsim/core.hpp"
#include "ncsim/rlnc.hpp"

namespace ncsim {

/// One cached generation: the coded rows plus, per face, the count of
/// packets already generated from this entry and sent over that face.
struct CsEntry {
  CodingMatrix matrix;
  std::map<Face, std::size_t> sigma;
};

/// A router's coded content store. Capacity is counted in Data packets
/// (rows) across all entries; std::nullopt means unbounded.
class ContentStore {
 public:
  explicit ContentStore(std::optional<std::size_t> capacity) : capacity_(capacity) {}

  std::size_t occupancy() const { return occupancy_; }
  std::optional<std::size_t> capacity() const { return capacity_; }
  bool full() const { return capacity_ && occupancy_ >= *capacity_; }
  bool has(const NamePrefix& prefix) const { return entries_.count(prefix) != 0; }
  std::size_t entry_count() const { return entries_.size(); }

  const CsEntry* find(const NamePrefix& prefix) const;

  /// Remaining supply of likely-innovative packets for a face:
  /// rank minus the sigma counter, never negative. 0 for a missing entry.
  std::size_t xi(const NamePrefix& prefix, Face face) const;

  /// Fresh recode of the entry, charged to the face's sigma counter.
  /// Caller must ensure xi(prefix, face) > 0; throws std::logic_error
  /// otherwise.
  CodedPacket serve(const NamePrefix& prefix, Face face, Rng& rng);

  /// Inserts an innovative packet, creating the entry when absent. Returns
  /// false (store unchanged) for non-innovative packets. Throws
  /// std::logic_error when called at full capacity: callers evict first.
  bool insert(const CodedPacket& p);

  /// Removes up to k randomly chosen rows of the entry; each removed row
  /// decrements every face's sigma counter by one (floored at zero). The
  /// entry disappears when its last row goes. Returns rows actually removed;
  /// 0 for an unknown prefix.
  std::size_t evict(const NamePrefix& prefix, std::size_t k, Rng& rng);

  /// Prefixes with entries, in name order.
  std::vector<NamePrefix> prefixes() const;

 private:
  std::optional<std::size_t> capacity_;
  std::size_t occupancy_ = 0;
  std::map<NamePrefix, CsEntry> entries_;
};

}  // namespace ncsim
