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

#include "ncsim/content_store.hpp"

#include <stdexcept>

namespace ncsim {

const CsEntry* ContentStore::find(const NamePrefix& prefix) const {
  auto it = entries_.find(prefix);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t ContentStore::xi(const NamePrefix& prefix, Face face) const {
  const CsEntry* e = find(prefix);
  if (e == nullptr) return 0;
  const std::size_t rank = e->matrix.rank();
  auto it = e->sigma.find(face);
  const std::size_t sent = it == e->sigma.end() ? 0 : it->second;
  return sent >= rank ? 0 : rank - sent;
}

CodedPacket ContentStore::serve(const NamePrefix& prefix, Face face, Rng& rng) {
  if (xi(prefix, face) == 0)
    throw std::logic_error("content_store: serve without remaining supply");
  CsEntry& e = entries_.at(prefix);
  CodedPacket out = e.matrix.recode(rng);
  out.prefix = prefix;
  e.sigma[face] += 1;
  return out;
}

bool ContentStore::insert(const CodedPacket& p) {
  if (full())
    throw std::logic_error("content_store: insert at full capacity");
  auto it = entries_.find(p.prefix);
  if (it == entries_.end()) {
    CsEntry e;
    e.matrix = CodingMatrix(p.coeffs.size());
    it = entries_.emplace(p.prefix, std::move(e)).first;
  }
  CsEntry& e = it->second;
  if (!e.matrix.is_innovative(p)) {
    if (e.matrix.empty()) entries_.erase(it);
    return false;
  }
  e.matrix.append(p);
  ++occupancy_;
  return true;
}

std::size_t ContentStore::evict(const NamePrefix& prefix, std::size_t k, Rng& rng) {
  auto it = entries_.find(prefix);
  if (it == entries_.end()) return 0;
  CsEntry& e = it->second;
  const std::size_t removed = std::min(k, e.matrix.row_count());
  for (std::size_t i = 0; i < removed; ++i) {
    const std::size_t victim = rng.index(e.matrix.row_count());
    e.matrix.remove_rows({victim});
  }
  for (auto& [face, sent] : e.sigma) sent = sent >= removed ? sent - removed : 0;
  occupancy_ -= removed;
  if (e.matrix.row_count() == 0) entries_.erase(it);
  return removed;
}

std::vector<NamePrefix> ContentStore::prefixes() const {
  std::vector<NamePrefix> out;
  out.reserve(entries_.size());
  for (const auto& [prefix, entry] : entries_) out.push_back(prefix);
  return out;
}

}  // namespace ncsim
