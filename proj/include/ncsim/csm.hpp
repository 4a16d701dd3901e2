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

#include <optional>
#include <string>
#include <vector>

#include "ncsim/catalog.hpp"
#include "ncsim/content_store.hpp"
#include "ncsim/core.hpp"
#include "ncsim/net.hpp"
#include "ncsim/popularity.hpp"

namespace ncsim {

enum class Policy { PopNetCod, LceLru, LceNoLimit, NoCache };

Policy policy_from_string(const std::string& s);
std::string policy_name(Policy p);

/// Outcome of Interest processing: either a Data packet to send back on the
/// arrival face, or the Interest to hand to the PIT/FIB (possibly with its
/// caching flag set).
struct InterestDecision {
  bool reply = false;
  CodedPacket packet;   // valid when reply
  Interest interest;    // valid when !reply
};

/// Outcome of Data processing: the packet to pass downstream and whether
/// this router inserted it. After an insertion under the popularity policy,
/// `out` is a fresh recode of the entry with its cached-upstream flag set.
struct DataResult {
  CodedPacket out;
  bool inserted = false;
};

/// The Content Store Manager: one caching policy enforced over one router's
/// content store.
///
/// Popularity policy, Interest path: a set caching-down flag short-circuits
/// to a plain content-store check. Otherwise the Interest is recorded for
/// popularity, served from the store when supply remains, left alone when
/// the PIT will aggregate it, and otherwise scored for placement; a positive
/// score marks the prefix to-cache and sets the caching-down flag on the
/// forwarded Interest.
///
/// Popularity policy, Data path: packets already cached upstream or without
/// an outstanding to-cache mark pass through untouched. Otherwise one mark
/// is consumed, space is freed via the eviction-candidate queue when the
/// store is full, the packet is inserted, and a recode of the entry is
/// emitted with the cached-upstream flag set.
class Csm {
 public:
  Csm(Policy policy, std::optional<std::size_t> capacity, Time tau,
      const ContentLibrary& lib, std::vector<Face> downstream_faces);

  Policy policy() const { return policy_; }

  InterestDecision process_interest(const Interest& interest, Face face,
                                    bool will_aggregate, Time t, Rng& rng);

  DataResult process_data(const CodedPacket& p, Time t, Rng& rng);

  /// Remaining likely-innovative supply toward a face (0 for NoCache).
  std::size_t xi_for(const NamePrefix& prefix, Face face) const;

  /// Innovativeness of a packet w.r.t. this store's entry. NoCache routers
  /// hold nothing to compare against, so everything counts as innovative.
  bool innovative_for(const CodedPacket& p) const;

  /// Serve one packet toward a face, charged to its sigma counter. Used by
  /// the forwarder to satisfy pending Interests when Data arrives.
  CodedPacket serve(const NamePrefix& prefix, Face face, Rng& rng);

  const ContentStore& store() const { return cs_; }
  const PopularityState& popularity() const { return pop_; }
  PopularityState& popularity() { return pop_; }

 private:
  /// Frees at least one slot. Scans the eviction-candidate queue for the
  /// first prefix with a positive eviction allowance; when a full scan
  /// frees nothing, falls back to one random row of the entry with the
  /// oldest last-Interest time. Returns false when nothing can be freed.
  bool make_room(Time t, Rng& rng);

  bool lru_make_room(Rng& rng);

  std::size_t gen_size(const NamePrefix& prefix) const;

  Policy policy_;
  std::size_t capacity_ = 0;  // meaningful for capacity-bound policies
  ContentStore cs_;
  PopularityState pop_;
  const ContentLibrary* lib_;
  std::vector<Face> downstream_faces_;
  std::map<NamePrefix, Time> lru_last_request_;
};

}  // namespace ncsim
