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

#include <deque>
#include <map>
#include <vector>

#include "ncsim/content_store.hpp"
#include "ncsim/core.hpp"
#include "ncsim/name.hpp"

namespace ncsim {

/// Per-router popularity bookkeeping: the recently received Interests per
/// face (window tau), the to-cache table of outstanding caching marks, and
/// the FIFO queue of eviction candidates fed by expiry.
class PopularityState {
 public:
  explicit PopularityState(Time tau = 10 * kSecond) : tau_(tau) {}

  Time tau() const { return tau_; }

  /// Appends (prefix, t) to the face's recent-Interest list.
  void record_interest(Face face, const NamePrefix& prefix, Time t);

  /// Drops every recorded Interest older than t - tau; each dropped prefix
  /// joins the eviction-candidate queue.
  void expire(Time t);

  /// Share of the face's recent Interests that match the prefix; 0 when the
  /// face has no recent Interests at all.
  double lambda(Face face, const NamePrefix& prefix) const;

  std::size_t recent_count(Face face) const;
  std::size_t recent_count(Face face, const NamePrefix& prefix) const;

  /// Time of the last recorded Interest for the prefix on any face, or the
  /// minimum Time when the prefix was never recorded.
  Time last_interest(const NamePrefix& prefix) const;

  // --- to-cache table -------------------------------------------------
  void mark_to_cache(const NamePrefix& prefix);
  /// Consumes one outstanding mark; false when none exists.
  bool consume_mark(const NamePrefix& prefix);
  std::size_t marks(const NamePrefix& prefix) const;

  // --- eviction-candidate queue ---------------------------------------
  std::size_t eviction_queue_size() const { return eviction_queue_.size(); }
  bool eviction_queue_empty() const { return eviction_queue_.empty(); }
  NamePrefix pop_eviction_candidate();
  const std::deque<NamePrefix>& eviction_queue() const { return eviction_queue_; }

 private:
  Time tau_;
  std::map<Face, std::deque<std::pair<NamePrefix, Time>>> recent_;
  std::map<Face, std::map<NamePrefix, std::size_t>> counts_;
  std::map<Face, std::size_t> totals_;
  std::map<NamePrefix, std::size_t> to_cache_;
  std::deque<NamePrefix> eviction_queue_;
  std::map<NamePrefix, Time> last_interest_;
};

/// Packets worth caching for one face: lambda * M, capped at the generation
/// size. Kept fractional; the placement and eviction scores consume it raw.
double target_cache_count(double lambda, std::size_t capacity, std::size_t gen_size);

/// Average shortfall (target minus remaining supply xi) over the downstream
/// faces other than the arrival face. Positive means the expected Data
/// packet should be cached. Defined as 0 when the router has at most one
/// downstream face: a reply is useless to the face it returns on.
double placement_score(const PopularityState& pop, const ContentStore& cs,
                       const std::vector<Face>& downstream_faces,
                       const NamePrefix& prefix, Face arrival_face,
                       std::size_t capacity, std::size_t gen_size);

/// Packets evictable from the entry while still covering every downstream
/// face's target: floor of the minimum over faces of (rank - target),
/// clamped at zero. 0 when the entry is absent.
std::size_t eviction_allowance(const PopularityState& pop, const ContentStore& cs,
                               const std::vector<Face>& downstream_faces,
                               const NamePrefix& prefix, std::size_t capacity,
                               std::size_t gen_size);

}  // namespace ncsim
