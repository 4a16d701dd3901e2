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

#include "ncsim/forwarder.hpp"

#include <stdexcept>

namespace ncsim {

Face Fib::next_face(Rng& rng) const {
  if (routes_.empty()) throw std::logic_error("fib: no route");
  if (routes_.size() == 1) return routes_[0].first;
  double total = 0.0;
  for (const auto& [face, w] : routes_) total += w;
  double pick = rng.uniform01() * total;
  for (const auto& [face, w] : routes_) {
    pick -= w;
    if (pick < 0.0) return face;
  }
  return routes_.back().first;
}

Router::Router(NodeId id, std::string name, const RouterConfig& cfg,
               const ContentLibrary& lib, std::vector<Face> downstream_faces,
               const std::vector<Face>& upstream_faces, Emitter& emitter,
               MetricsLog& metrics, Rng& rng)
    : Node(id, std::move(name)),
      csm_(cfg.policy, cfg.cs_capacity, cfg.tau, lib, std::move(downstream_faces)),
      pit_timeout_(cfg.pit_timeout),
      emitter_(emitter),
      metrics_(metrics),
      rng_(rng) {
  for (Face f : upstream_faces) fib_.add_route(f);
}

void Router::purge(PitEntry& entry, Time t) {
  for (auto& [face, q] : entry.pending)
    while (!q.empty() && q.front() <= t) q.pop_front();
  while (!entry.outstanding.empty() && entry.outstanding.front() <= t)
    entry.outstanding.pop_front();
}

void Router::erase_if_empty(const NamePrefix& prefix) {
  auto it = pit_.find(prefix);
  if (it != pit_.end() && it->second.empty()) pit_.erase(it);
}

void Router::handle_interest(Face face, const Interest& interest, Time t) {
  const NamePrefix& prefix = interest.prefix;
  interests_in_[{prefix, face}] += 1;

  std::size_t pending_f = 0;
  std::size_t outstanding = 0;
  if (auto it = pit_.find(prefix); it != pit_.end()) {
    purge(it->second, t);
    auto pq = it->second.pending.find(face);
    pending_f = pq == it->second.pending.end() ? 0 : pq->second.size();
    outstanding = it->second.outstanding.size();
    erase_if_empty(prefix);
  }

  // Aggregate when the Data already expected from upstream (plus anything
  // the store could still serve this face) covers every pending Interest on
  // this face and the new one: each arriving packet yields one reply per
  // pending face.
  const bool will_aggregate =
      outstanding + csm_.xi_for(prefix, face) >= pending_f + 1;

  InterestDecision dec = csm_.process_interest(interest, face, will_aggregate, t, rng_);

  if (dec.reply) {
    metrics_.record_interest_outcome(name(), InterestOutcome::CsHit, t);
    data_out_[{prefix, face}] += 1;
    emitter_.emit_data(id(), face, DataEnvelope{dec.packet, emitter_.new_trace_id()});
    return;
  }

  if (will_aggregate) {
    pit_[prefix].pending[face].push_back(t + pit_timeout_);
    metrics_.record_interest_outcome(name(), InterestOutcome::Aggregated, t);
    return;
  }

  if (fib_.empty()) {
    metrics_.record_interest_outcome(name(), InterestOutcome::Dropped, t);
    return;
  }

  PitEntry& entry = pit_[prefix];
  entry.pending[face].push_back(t + pit_timeout_);
  entry.outstanding.push_back(t + pit_timeout_);
  metrics_.record_interest_outcome(name(), InterestOutcome::Forwarded, t);
  emitter_.emit_interest(id(), fib_.next_face(rng_), dec.interest);
}

void Router::handle_data(Face face, const DataEnvelope& data, Time t) {
  const NamePrefix& prefix = data.packet.prefix;

  auto it = pit_.find(prefix);
  if (it != pit_.end()) purge(it->second, t);
  if (it == pit_.end() || it->second.empty()) {
    // Nothing asked for this: unsolicited (or everything timed out).
    metrics_.routers[name()].unsolicited += 1;
    erase_if_empty(prefix);
    return;
  }

  PitEntry& entry = it->second;
  if (!entry.outstanding.empty()) entry.outstanding.pop_front();

  const bool innovative = csm_.innovative_for(data.packet);
  if (!innovative && entry.pending_total() == 0) {
    metrics_.routers[name()].duplicates_discarded += 1;
    erase_if_empty(prefix);
    return;
  }

  DataResult res = csm_.process_data(data.packet, t, rng_);
  if (res.inserted) metrics_.record_insertion(name(), data.trace_id);

  // One reply per downstream face with a pending Interest. Prefer a fresh
  // recode charged to that face's sigma counter; fall back to a copy of the
  // CSM output when the store has no supply for the face (pass-through).
  for (auto& [down_face, q] : entry.pending) {
    if (q.empty()) continue;
    CodedPacket out;
    if (csm_.xi_for(prefix, down_face) > 0) {
      out = csm_.serve(prefix, down_face, rng_);
    } else {
      out = res.out;
    }
    q.pop_front();
    data_out_[{prefix, down_face}] += 1;
    emitter_.emit_data(id(), down_face, DataEnvelope{out, data.trace_id});
  }
  erase_if_empty(prefix);
}

std::uint64_t Router::interests_in(const NamePrefix& prefix, Face face) const {
  auto it = interests_in_.find({prefix, face});
  return it == interests_in_.end() ? 0 : it->second;
}

std::uint64_t Router::data_out(const NamePrefix& prefix, Face face) const {
  auto it = data_out_.find({prefix, face});
  return it == data_out_.end() ? 0 : it->second;
}

}  // namespace ncsim
