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

#include "ncsim/metrics.hpp"

namespace ncsim {

void MetricsLog::record_interest_outcome(const std::string& router,
                                         InterestOutcome outcome, Time t) {
  RouterSeries& s = routers[router];
  std::uint8_t h = 0;
  switch (outcome) {
    case InterestOutcome::CsHit:
      ++s.cs_hits;
      h = 1;
      break;
    case InterestOutcome::Aggregated:
      ++s.aggregated;
      h = 1;
      break;
    case InterestOutcome::Forwarded:
      ++s.forwarded;
      break;
    case InterestOutcome::Dropped:
      ++s.dropped;
      break;
  }
  s.hit_samples.emplace_back(t, h);
}

void MetricsLog::record_insertion(const std::string& router, std::uint64_t trace_id) {
  routers[router].insertions += 1;
  insertions_by_trace[trace_id].push_back(router);
}

std::optional<double> MetricsLog::cache_hit_rate(const std::string& router, Time t,
                                                 Time window) const {
  auto it = routers.find(router);
  if (it == routers.end()) return std::nullopt;
  std::uint64_t n = 0;
  std::uint64_t hits = 0;
  for (const auto& [at, h] : it->second.hit_samples) {
    if (at < t || at > t + window) continue;
    ++n;
    hits += h;
  }
  if (n == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(n);
}

std::optional<double> MetricsLog::router_hit_rate(const std::string& router) const {
  auto it = routers.find(router);
  if (it == routers.end()) return std::nullopt;
  const RouterSeries& s = it->second;
  const std::uint64_t n = s.interests_received();
  if (n == 0) return std::nullopt;
  return static_cast<double>(s.cs_hits + s.aggregated) / static_cast<double>(n);
}

std::optional<double> MetricsLog::overall_hit_rate() const {
  std::uint64_t n = 0;
  std::uint64_t hits = 0;
  for (const auto& [name, s] : routers) {
    n += s.interests_received();
    hits += s.cs_hits + s.aggregated;
  }
  if (n == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(n);
}

std::optional<double> MetricsLog::load_reduction() const {
  if (clients_received == 0) return std::nullopt;
  return 1.0 - static_cast<double>(source_sent) / static_cast<double>(clients_received);
}

std::optional<double> MetricsLog::client_mean_goodput(const std::string& client) const {
  auto it = clients.find(client);
  if (it == clients.end() || it->second.goodput_samples.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& [t, g] : it->second.goodput_samples) sum += g;
  return sum / static_cast<double>(it->second.goodput_samples.size());
}

std::optional<double> MetricsLog::mean_goodput() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [name, c] : clients) {
    auto g = client_mean_goodput(name);
    if (!g) continue;
    sum += *g;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::map<std::string, double> MetricsLog::representation_shares() const {
  std::map<std::string, double> shares;
  std::uint64_t total = 0;
  for (const auto& [name, c] : clients)
    for (const auto& [rep, count] : c.rep_segments) {
      shares[rep] += static_cast<double>(count);
      total += count;
    }
  if (total > 0)
    for (auto& [rep, v] : shares) v /= static_cast<double>(total);
  return shares;
}

}  // namespace ncsim
