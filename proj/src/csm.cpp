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

#include "ncsim/csm.hpp"

#include <limits>
#include <stdexcept>

namespace ncsim {

Policy policy_from_string(const std::string& s) {
  if (s == "popnetcod") return Policy::PopNetCod;
  if (s == "lce_lru") return Policy::LceLru;
  if (s == "lce_nolimit") return Policy::LceNoLimit;
  if (s == "nocache") return Policy::NoCache;
  throw std::invalid_argument("csm: unknown policy '" + s + "'");
}

std::string policy_name(Policy p) {
  switch (p) {
    case Policy::PopNetCod: return "popnetcod";
    case Policy::LceLru: return "lce_lru";
    case Policy::LceNoLimit: return "lce_nolimit";
    case Policy::NoCache: return "nocache";
  }
  return "?";
}

namespace {

std::optional<std::size_t> store_capacity(Policy policy,
                                          std::optional<std::size_t> capacity) {
  if (policy == Policy::LceNoLimit) return std::nullopt;  // unbounded store
  if (policy == Policy::NoCache) return 0;
  return capacity;
}

}  // namespace

Csm::Csm(Policy policy, std::optional<std::size_t> capacity, Time tau,
         const ContentLibrary& lib, std::vector<Face> downstream_faces)
    : policy_(policy),
      capacity_(capacity.value_or(0)),
      cs_(store_capacity(policy, capacity)),
      pop_(tau),
      lib_(&lib),
      downstream_faces_(std::move(downstream_faces)) {}

std::size_t Csm::gen_size(const NamePrefix& prefix) const {
  return lib_->generation(prefix).size;
}

std::size_t Csm::xi_for(const NamePrefix& prefix, Face face) const {
  if (policy_ == Policy::NoCache) return 0;
  return cs_.xi(prefix, face);
}

bool Csm::innovative_for(const CodedPacket& p) const {
  if (policy_ == Policy::NoCache) return true;
  const CsEntry* e = cs_.find(p.prefix);
  if (e == nullptr) {
    for (std::uint8_t c : p.coeffs)
      if (c != 0) return true;
    return false;
  }
  return e->matrix.is_innovative(p);
}

CodedPacket Csm::serve(const NamePrefix& prefix, Face face, Rng& rng) {
  CodedPacket out = cs_.serve(prefix, face, rng);
  // Anything generated from a router's store carries information that is
  // already cached on the path; flag it so routers below do not cache it
  // again. The baselines do not participate in the flag protocol.
  out.cached_up = (policy_ == Policy::PopNetCod);
  return out;
}

InterestDecision Csm::process_interest(const Interest& interest, Face face,
                                       bool will_aggregate, Time t, Rng& rng) {
  InterestDecision dec;
  dec.interest = interest;
  const NamePrefix& prefix = interest.prefix;

  switch (policy_) {
    case Policy::NoCache:
      return dec;

    case Policy::LceLru:
    case Policy::LceNoLimit:
      if (policy_ == Policy::LceLru) lru_last_request_[prefix] = t;
      if (cs_.xi(prefix, face) > 0) {
        dec.reply = true;
        dec.packet = serve(prefix, face, rng);
      }
      return dec;

    case Policy::PopNetCod:
      break;
  }

  // A downstream router already claimed the expected reply: only try the
  // content store, leave the popularity state alone.
  if (interest.caching_down) {
    if (cs_.xi(prefix, face) > 0) {
      dec.reply = true;
      dec.packet = serve(prefix, face, rng);
    }
    return dec;
  }

  pop_.record_interest(face, prefix, t);

  if (cs_.xi(prefix, face) > 0) {
    dec.reply = true;
    dec.packet = serve(prefix, face, rng);
    return dec;
  }

  if (will_aggregate) return dec;

  pop_.expire(t);
  const double score = placement_score(pop_, cs_, downstream_faces_, prefix, face,
                                       capacity_, gen_size(prefix));
  if (score > 0.0) {
    pop_.mark_to_cache(prefix);
    dec.interest.caching_down = true;
  }
  return dec;
}

bool Csm::make_room(Time t, Rng& rng) {
  pop_.expire(t);
  while (cs_.full()) {
    bool evicted = false;
    std::size_t scan = pop_.eviction_queue_size();
    while (scan-- > 0) {
      const NamePrefix candidate = pop_.pop_eviction_candidate();
      if (!cs_.has(candidate)) continue;  // dropped from the queue
      const std::size_t allowance = eviction_allowance(
          pop_, cs_, downstream_faces_, candidate, capacity_, gen_size(candidate));
      if (allowance == 0) continue;
      cs_.evict(candidate, allowance, rng);
      evicted = true;
      break;
    }
    if (!cs_.full()) break;
    if (evicted) continue;
    // Full scan freed nothing: drop one random row from the entry with the
    // oldest last-Interest time so insertion always makes progress.
    NamePrefix victim;
    Time oldest = std::numeric_limits<Time>::max();
    bool found = false;
    for (const NamePrefix& p : cs_.prefixes()) {
      const Time last = pop_.last_interest(p);
      if (!found || last < oldest) {
        victim = p;
        oldest = last;
        found = true;
      }
    }
    if (!found) return false;  // nothing cached at all (capacity 0)
    cs_.evict(victim, 1, rng);
  }
  return true;
}

bool Csm::lru_make_room(Rng& rng) {
  while (cs_.full()) {
    NamePrefix victim;
    Time oldest = std::numeric_limits<Time>::max();
    bool found = false;
    for (const NamePrefix& p : cs_.prefixes()) {
      auto it = lru_last_request_.find(p);
      const Time last =
          it == lru_last_request_.end() ? std::numeric_limits<Time>::min() : it->second;
      if (!found || last < oldest) {
        victim = p;
        oldest = last;
        found = true;
      }
    }
    if (!found) return false;
    cs_.evict(victim, 1, rng);
  }
  return true;
}

DataResult Csm::process_data(const CodedPacket& p, Time t, Rng& rng) {
  DataResult res;
  res.out = p;

  switch (policy_) {
    case Policy::NoCache:
      return res;

    case Policy::LceLru:
    case Policy::LceNoLimit: {
      if (!innovative_for(p)) return res;
      if (cs_.full() && policy_ == Policy::LceLru && !lru_make_room(rng)) return res;
      res.inserted = cs_.insert(p);
      return res;
    }

    case Policy::PopNetCod:
      break;
  }

  if (p.cached_up) return res;          // already cached on the way down
  if (pop_.marks(p.prefix) == 0) return res;  // no outstanding decision
  if (!innovative_for(p)) return res;   // keep the mark for a useful packet

  pop_.consume_mark(p.prefix);
  if (cs_.full() && !make_room(t, rng)) return res;

  cs_.insert(p);
  res.inserted = true;

  // Emit a fresh combination of the entry instead of the raw packet; it
  // contains the newly cached row, so it travels flagged as cached upstream.
  const CsEntry* e = cs_.find(p.prefix);
  res.out = e->matrix.recode(rng);
  res.out.prefix = p.prefix;
  res.out.cached_up = true;
  return res;
}

}  // namespace ncsim
