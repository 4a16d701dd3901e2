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

#include "ncsim/popularity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ncsim {

void PopularityState::record_interest(Face face, const NamePrefix& prefix, Time t) {
  recent_[face].emplace_back(prefix, t);
  counts_[face][prefix] += 1;
  totals_[face] += 1;
  last_interest_[prefix] = t;
}

void PopularityState::expire(Time t) {
  const Time cutoff = t - tau_;
  for (auto& [face, list] : recent_) {
    while (!list.empty() && list.front().second < cutoff) {
      const NamePrefix prefix = list.front().first;
      list.pop_front();
      auto& per_prefix = counts_[face];
      auto it = per_prefix.find(prefix);
      if (it != per_prefix.end() && --it->second == 0) per_prefix.erase(it);
      totals_[face] -= 1;
      eviction_queue_.push_back(prefix);
    }
  }
}

double PopularityState::lambda(Face face, const NamePrefix& prefix) const {
  auto tot = totals_.find(face);
  if (tot == totals_.end() || tot->second == 0) return 0.0;
  auto per_prefix = counts_.find(face);
  if (per_prefix == counts_.end()) return 0.0;
  auto it = per_prefix->second.find(prefix);
  if (it == per_prefix->second.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(tot->second);
}

std::size_t PopularityState::recent_count(Face face) const {
  auto it = totals_.find(face);
  return it == totals_.end() ? 0 : it->second;
}

std::size_t PopularityState::recent_count(Face face, const NamePrefix& prefix) const {
  auto per_prefix = counts_.find(face);
  if (per_prefix == counts_.end()) return 0;
  auto it = per_prefix->second.find(prefix);
  return it == per_prefix->second.end() ? 0 : it->second;
}

Time PopularityState::last_interest(const NamePrefix& prefix) const {
  auto it = last_interest_.find(prefix);
  return it == last_interest_.end() ? std::numeric_limits<Time>::min() : it->second;
}

void PopularityState::mark_to_cache(const NamePrefix& prefix) {
  to_cache_[prefix] += 1;
}

bool PopularityState::consume_mark(const NamePrefix& prefix) {
  auto it = to_cache_.find(prefix);
  if (it == to_cache_.end()) return false;
  if (--it->second == 0) to_cache_.erase(it);
  return true;
}

std::size_t PopularityState::marks(const NamePrefix& prefix) const {
  auto it = to_cache_.find(prefix);
  return it == to_cache_.end() ? 0 : it->second;
}

NamePrefix PopularityState::pop_eviction_candidate() {
  if (eviction_queue_.empty())
    throw std::logic_error("popularity: eviction queue is empty");
  NamePrefix p = eviction_queue_.front();
  eviction_queue_.pop_front();
  return p;
}

double target_cache_count(double lambda, std::size_t capacity, std::size_t gen_size) {
  const double want = lambda * static_cast<double>(capacity);
  const double cap = static_cast<double>(gen_size);
  return want < cap ? want : cap;
}

double placement_score(const PopularityState& pop, const ContentStore& cs,
                       const std::vector<Face>& downstream_faces,
                       const NamePrefix& prefix, Face arrival_face,
                       std::size_t capacity, std::size_t gen_size) {
  if (downstream_faces.size() <= 1) return 0.0;
  double sum = 0.0;
  for (Face f : downstream_faces) {
    if (f == arrival_face) continue;
    const double target = target_cache_count(pop.lambda(f, prefix), capacity, gen_size);
    sum += target - static_cast<double>(cs.xi(prefix, f));
  }
  return sum / static_cast<double>(downstream_faces.size() - 1);
}

std::size_t eviction_allowance(const PopularityState& pop, const ContentStore& cs,
                               const std::vector<Face>& downstream_faces,
                               const NamePrefix& prefix, std::size_t capacity,
                               std::size_t gen_size) {
  const CsEntry* e = cs.find(prefix);
  if (e == nullptr || downstream_faces.empty()) return 0;
  const double rank = static_cast<double>(e->matrix.rank());
  double spare = std::numeric_limits<double>::infinity();
  for (Face f : downstream_faces) {
    const double target = target_cache_count(pop.lambda(f, prefix), capacity, gen_size);
    spare = std::min(spare, rank - target);
  }
  if (spare <= 0.0) return 0;
  return static_cast<std::size_t>(std::floor(spare));
}

}  // namespace ncsim
