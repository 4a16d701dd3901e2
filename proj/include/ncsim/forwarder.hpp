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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsim/csm.hpp"
#include "ncsim/metrics.hpp"
#include "ncsim/net.hpp"

namespace ncsim {

/// Pending-Interest state for one prefix. Both sides hold expiry times in
/// arrival order, so timeout purging pops from the front.
struct PitEntry {
  std::map<Face, std::deque<Time>> pending;  // unsatisfied Interests per downstream face
  std::deque<Time> outstanding;              // Interests forwarded upstream, unanswered

  std::size_t pending_total() const {
    std::size_t n = 0;
    for (const auto& [face, q] : pending) n += q.size();
    return n;
  }
  bool empty() const { return outstanding.empty() && pending_total() == 0; }
};

/// Upstream faces with weights; the forwarding choice is a weighted-random
/// draw, which is what spreads one router's Interests over multiple paths.
class Fib {
 public:
  void add_route(Face face, double weight = 1.0) { routes_.emplace_back(face, weight); }
  bool empty() const { return routes_.empty(); }
  std::size_t route_count() const { return routes_.size(); }

  /// Throws std::logic_error when no route exists.
  Face next_face(Rng& rng) const;

 private:
  std::vector<std::pair<Face, double>> routes_;
};

struct RouterConfig {
  Policy policy = Policy::PopNetCod;
  std::optional<std::size_t> cs_capacity;
  Time tau = 10 * kSecond;
  Time pit_timeout = 2 * kSecond;
};

/// An NDN router: PIT aggregation and timeout, FIB forwarding, the
/// innovativeness filter on arriving Data, and the CSM hook on both paths.
///
/// Interest path: the PIT decides whether the Interest can ride on Data
/// already expected (aggregation), the CSM decides between replying from
/// the store and forwarding; forwarded Interests pick a FIB face.
///
/// Data path: one outstanding upstream Interest is consumed, non-innovative
/// packets with nothing pending are dropped, the CSM sees the packet, and
/// every downstream face with a pending Interest receives one packet — a
/// fresh recode charged to that face when the store has supply, a copy of
/// the CSM's output otherwise.
class Router : public Node {
 public:
  Router(NodeId id, std::string name, const RouterConfig& cfg,
         const ContentLibrary& lib, std::vector<Face> downstream_faces,
         const std::vector<Face>& upstream_faces, Emitter& emitter,
         MetricsLog& metrics, Rng& rng);

  void handle_interest(Face face, const Interest& interest, Time t) override;
  void handle_data(Face face, const DataEnvelope& data, Time t) override;

  Csm& csm() { return csm_; }
  const Csm& csm() const { return csm_; }
  const std::map<NamePrefix, PitEntry>& pit() const { return pit_; }

  /// Data packets emitted toward a face for a prefix never exceed the
  /// Interests received from it; these counters let tests check that.
  std::uint64_t interests_in(const NamePrefix& prefix, Face face) const;
  std::uint64_t data_out(const NamePrefix& prefix, Face face) const;

 private:
  void purge(PitEntry& entry, Time t);
  void erase_if_empty(const NamePrefix& prefix);

  Csm csm_;
  Fib fib_;
  std::map<NamePrefix, PitEntry> pit_;
  Time pit_timeout_;
  Emitter& emitter_;
  MetricsLog& metrics_;
  Rng& rng_;
  std::map<std::pair<NamePrefix, Face>, std::uint64_t> interests_in_;
  std::map<std::pair<NamePrefix, Face>, std::uint64_t> data_out_;
};

}  // namespace ncsim
